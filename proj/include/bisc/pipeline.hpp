#pragma once

// The end-to-end pipeline: mine + gen, avoidance sets, verification of the
// learned basis against its input, and redundancy pruning.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "bisc/gen.hpp"
#include "bisc/mine.hpp"
#include "bisc/parallel.hpp"

namespace bisc {

/// Default largest length `avoiders` will enumerate (10! permutations).
inline constexpr std::size_t kDefaultAvoidersCap = 10;

/// Raised when a request exceeds a configured resource cap.
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Basis {
  std::vector<MeshPattern> patterns;
  std::size_t m = 0;
  std::size_t N = 0;  // longest input permutation
  bool pruned = false;

  /// Sorts by (length, pattern, shading) and drops duplicates.
  void normalize() {
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  }

  [[nodiscard]] std::size_t size() const noexcept { return patterns.size(); }
  [[nodiscard]] bool empty() const noexcept { return patterns.empty(); }

  friend bool operator==(const Basis&, const Basis&) = default;
};

inline Basis make_basis(std::vector<MeshPattern> patterns) {
  Basis b;
  b.patterns = std::move(patterns);
  b.normalize();
  for (const auto& p : b.patterns) b.m = std::max(b.m, p.length());
  return b;
}

/// Av(basis) restricted to each length 0..n, each level in lex order.
struct AvoidanceSet {
  std::vector<std::vector<Permutation>> by_length;

  [[nodiscard]] std::vector<Permutation> flat() const {
    std::vector<Permutation> out;
    for (const auto& level : by_length) out.insert(out.end(), level.begin(), level.end());
    return out;
  }
  [[nodiscard]] std::size_t total() const {
    std::size_t n = 0;
    for (const auto& level : by_length) n += level.size();
    return n;
  }
};

inline std::size_t max_length(std::span<const Permutation> perms) {
  std::size_t n = 0;
  for (const auto& p : perms) n = std::max(n, p.size());
  return n;
}

/// Gen(Mine(A, m)) flattened into a basis.
inline Basis bisc(std::span<const Permutation> inputs, std::size_t m,
                  std::size_t max_m = kDefaultMaxMineLength) {
  Basis b;
  b.patterns = gen(mine(inputs, m, max_m)).patterns();
  b.normalize();
  b.m = m;
  b.N = max_length(inputs);
  return b;
}

namespace detail {

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// The `rank`-th permutation of 1..n in lexicographic order.
inline std::vector<int> nth_permutation(std::size_t n, std::size_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::size_t f = factorial(i - 1);
    const std::size_t idx = rank / f;
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return out;
}

/// Permutations of length `len`, in lex order, accepted by `keep`.
template <class Keep>
std::vector<Permutation> filter_level(std::size_t len, Keep&& keep) {
  const std::size_t total = factorial(len);
  const std::size_t workers = chunk_count(total, 2048);
  std::vector<std::vector<Permutation>> parts(workers);
  parallel_chunks(total, workers, [&](std::size_t w, std::size_t b, std::size_t e) {
    if (b == e) return;
    auto v = nth_permutation(len, b);
    for (std::size_t r = b; r < e; ++r) {
      auto pi = Permutation::unchecked(v);
      if (keep(pi)) parts[w].push_back(std::move(pi));
      std::next_permutation(v.begin(), v.end());
    }
  });
  std::vector<Permutation> out;
  for (auto& part : parts)
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

}  // namespace detail

/// Exact brute-force filter of S_0..S_n by mesh containment. Throws
/// LimitError when n exceeds `cap`.
inline AvoidanceSet avoiders(std::span<const MeshPattern> patterns, std::size_t n,
                             std::size_t cap = kDefaultAvoidersCap) {
  if (n > cap)
    throw LimitError("avoiders: length " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(cap));
  AvoidanceSet out;
  for (std::size_t len = 0; len <= n; ++len)
    out.by_length.push_back(
        detail::filter_level(len, [&](const Permutation& pi) { return avoids_all(pi, patterns); }));
  return out;
}

inline AvoidanceSet avoiders(const Basis& basis, std::size_t n,
                             std::size_t cap = kDefaultAvoidersCap) {
  return avoiders(std::span<const MeshPattern>(basis.patterns), n, cap);
}

/// True iff every member of A of length at most n avoids every pattern of
/// the basis. For a basis learned from A this must hold.
inline bool verify_subset(std::span<const Permutation> inputs, const Basis& basis, std::size_t n) {
  for (const auto& pi : inputs)
    if (pi.size() <= n && !avoids_all(pi, basis.patterns)) return false;
  return true;
}

struct EqualityReport {
  bool equal = true;
  /// Shortest, then lexicographically first, permutation in exactly one of
  /// A_{<=n} and Av(basis)_{<=n}.
  std::optional<Permutation> counterexample;
  explicit operator bool() const noexcept { return equal; }
};

inline EqualityReport verify_equality(std::span<const Permutation> inputs, const Basis& basis,
                                      std::size_t n, std::size_t cap = kDefaultAvoidersCap) {
  std::set<Permutation> wanted;
  for (const auto& pi : inputs)
    if (pi.size() <= n) wanted.insert(pi);
  const auto got = avoiders(basis, n, cap).flat();  // sorted by (length, lex)

  std::vector<Permutation> diff;
  std::set_symmetric_difference(wanted.begin(), wanted.end(), got.begin(), got.end(),
                                std::back_inserter(diff));
  if (diff.empty()) return {};
  return {false, diff.front()};
}

/// Greedily drops patterns, longest first and then in reverse lex order,
/// while Av(basis)_{<=n} still equals A_{<=n}. Throws std::invalid_argument
/// if the equality does not hold for the input basis.
inline Basis prune(const Basis& basis, std::span<const Permutation> inputs, std::size_t n,
                   std::size_t cap = kDefaultAvoidersCap) {
  Basis sorted = basis;
  sorted.normalize();
  if (const auto report = verify_equality(inputs, sorted, n, cap); !report)
    throw std::invalid_argument("prune: basis does not describe the input up to length " +
                                std::to_string(n) + " (first difference: " +
                                report.counterexample->str() + ")");

  // Removing patterns can only add avoiders, so only the permutations
  // outside A need to stay covered.
  std::set<Permutation> members;
  for (const auto& pi : inputs)
    if (pi.size() <= n) members.insert(pi);

  const auto& pats = sorted.patterns;
  std::vector<std::vector<std::size_t>> covers;  // per non-member: contained pattern indices
  for (std::size_t len = 0; len <= n; ++len) {
    for (const auto& pi : all_permutations(len)) {
      if (members.contains(pi)) continue;
      std::vector<std::size_t> hit;
      for (std::size_t i = 0; i < pats.size(); ++i)
        if (mesh_contains(pi, pats[i])) hit.push_back(i);
      covers.push_back(std::move(hit));
    }
  }
  std::vector<std::vector<std::size_t>> covered_by(pats.size());
  std::vector<std::size_t> live(covers.size());
  for (std::size_t c = 0; c < covers.size(); ++c) {
    live[c] = covers[c].size();
    for (const auto i : covers[c]) covered_by[i].push_back(c);
  }

  std::vector<bool> keep(pats.size(), true);
  for (std::size_t i = pats.size(); i-- > 0;) {
    const bool needed = std::any_of(covered_by[i].begin(), covered_by[i].end(),
                                    [&](std::size_t c) { return live[c] == 1; });
    if (needed) continue;
    keep[i] = false;
    for (const auto c : covered_by[i]) --live[c];
  }

  Basis out = sorted;
  out.patterns.clear();
  for (std::size_t i = 0; i < pats.size(); ++i)
    if (keep[i]) out.patterns.push_back(pats[i]);
  out.pruned = true;
  return out;
}

}  // namespace bisc
