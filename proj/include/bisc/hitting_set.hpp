#pragma once

// Minimal hitting set (minimal transversal) enumeration over a universe of
// at most 64 elements.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace bisc {

/// Enumerates every inclusion-minimal set H with H ∩ F ≠ ∅ for all F in
/// `family`, using the MMCS depth-first scheme of Murakami and Uno: branch
/// on the elements of an uncovered set that has the fewest candidates, and
/// keep a branch only while every chosen element is still the sole hitter
/// of some set. Each minimal hitting set is produced exactly once.
///
/// An empty member makes the family unhittable (no output). An empty family
/// is hit by the empty set.
class MinimalHittingSets {
public:
  using Mask = std::uint64_t;

  explicit MinimalHittingSets(std::vector<Mask> family) : family_(std::move(family)) {
    for (const auto f : family_) universe_ |= f;
  }

  template <class Emit>
  void enumerate(Emit&& emit) const {
    for (const auto f : family_)
      if (f == 0) return;
    search(0, universe_, emit);
  }

  std::vector<Mask> all() const {
    std::vector<Mask> out;
    enumerate([&](Mask h) { out.push_back(h); });
    return out;
  }

private:
  // True when every element of `chosen` is the only element of `chosen`
  // hitting some member of the family.
  bool is_minimal(Mask chosen) const {
    Mask critical = 0;
    for (const auto f : family_) {
      const Mask hit = f & chosen;
      if (hit != 0 && (hit & (hit - 1)) == 0) critical |= hit;
    }
    return critical == chosen;
  }

  template <class Emit>
  void search(Mask chosen, Mask candidates, Emit& emit) const {
    const Mask* pick = nullptr;
    int best = 65;
    for (const auto& f : family_) {
      if (f & chosen) continue;
      const int c = std::popcount(f & candidates);
      if (c < best) {
        best = c;
        pick = &f;
        if (c == 0) break;
      }
    }
    if (pick == nullptr) {
      emit(chosen);
      return;
    }
    const Mask branch = *pick & candidates;
    candidates &= ~branch;
    for (Mask b = branch; b != 0; b &= b - 1) {
      const Mask e = b & (~b + 1);
      const Mask next = chosen | e;
      if (is_minimal(next)) search(next, candidates, emit);
      candidates |= e;
    }
  }

  std::vector<Mask> family_;
  Mask universe_ = 0;
};

}  // namespace bisc
