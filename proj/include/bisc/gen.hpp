#pragma once

// Generation of forbidden mesh patterns from mined allowed shadings.

#include <algorithm>
#include <map>
#include <vector>

#include "bisc/hitting_set.hpp"
#include "bisc/mine.hpp"

namespace bisc {

/// Classical pattern -> minimal forbidden shadings. std::map keeps the
/// patterns in (length, lex) order.
struct ForbiddenTable {
  std::size_t m = 0;
  std::map<Permutation, ShadingSet> entries;

  [[nodiscard]] std::size_t pattern_count() const {
    std::size_t n = 0;
    for (const auto& [p, forb] : entries) n += forb.size();
    return n;
  }

  /// Every (p, R) of the table in output order.
  [[nodiscard]] std::vector<MeshPattern> patterns() const {
    std::vector<MeshPattern> out;
    for (const auto& [p, forb] : entries)
      for (const auto& r : forb) out.emplace_back(p, r);
    return out;
  }

  friend bool operator==(const ForbiddenTable&, const ForbiddenTable&) = default;
};

/// Inclusion-minimal shadings of `p` not contained in any member of `sh`,
/// computed as the minimal hitting sets of the complements of `sh`.
/// A never-seen pattern (empty `sh`) yields the empty shading; a pattern
/// allowed with the full shading yields nothing.
inline ShadingSet minimal_forbidden(const Permutation& p, const ShadingSet& sh) {
  const std::size_t k = p.size();
  if (sh.empty()) return {Shading(k)};

  std::vector<Shading::Mask> complements;
  complements.reserve(sh.size());
  for (const auto& t : sh) complements.push_back(t.complement().bits());

  ShadingSet out;
  MinimalHittingSets(std::move(complements)).enumerate([&](Shading::Mask h) {
    out.emplace_back(k, h);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// True when (p, r) is implied by some already-final forbidden pattern of
/// strictly shorter length.
inline bool is_consequence(const ForbiddenTable& shorter, const MeshPattern& candidate) {
  for (const auto& [q, forb] : shorter.entries) {
    if (q.size() >= candidate.length()) break;
    for (const auto& r : forb)
      if (mesh_implies(MeshPattern(q, r), candidate)) return true;
  }
  return false;
}

/// Walks the table in increasing pattern length and drops every shading
/// implied by a forbidden pattern of strictly smaller length that survived
/// its own pass.
inline ForbiddenTable eliminate_consequences(const ForbiddenTable& table) {
  ForbiddenTable out;
  out.m = table.m;
  auto it = table.entries.begin();
  while (it != table.entries.end()) {
    const std::size_t len = it->first.size();
    // Patterns of the same length never eliminate each other, so a whole
    // length level is checked against `out` before any of it is added.
    std::vector<std::pair<Permutation, ShadingSet>> level;
    for (; it != table.entries.end() && it->first.size() == len; ++it) {
      ShadingSet kept;
      for (const auto& r : it->second)
        if (!is_consequence(out, MeshPattern(it->first, r))) kept.push_back(r);
      level.emplace_back(it->first, std::move(kept));
    }
    for (auto& [p, forb] : level) out.entries.emplace(std::move(p), std::move(forb));
  }
  return out;
}

/// Per-pattern minimal forbidden shadings followed by consequence
/// elimination in length order.
inline ForbiddenTable gen(const MinedTable& mined) {
  ForbiddenTable raw;
  raw.m = mined.m;
  std::vector<const std::pair<const Permutation, ShadingSet>*> items;
  for (const auto& e : mined.entries) items.push_back(&e);

  std::vector<ShadingSet> forb(items.size());
  const std::size_t workers = chunk_count(items.size(), 8);
  parallel_chunks(items.size(), workers, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) forb[i] = minimal_forbidden(items[i]->first, items[i]->second);
  });
  for (std::size_t i = 0; i < items.size(); ++i)
    raw.entries.emplace(items[i]->first, std::move(forb[i]));
  return eliminate_consequences(raw);
}

}  // namespace bisc
