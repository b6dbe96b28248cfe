#pragma once

// Mining of allowed mesh patterns: for each classical pattern of length at
// most m, the antichain of maximal shadings witnessed by the input.

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "bisc/mesh.hpp"
#include "bisc/parallel.hpp"

namespace bisc {

/// Default upper bound on the mined pattern length.
inline constexpr std::size_t kDefaultMaxMineLength = 6;

using ShadingSet = std::vector<Shading>;

/// Inserts `r` into the antichain `sh` unless some member already contains
/// it; members contained in `r` are dropped. Returns true if `r` was added.
inline bool antichain_insert(ShadingSet& sh, const Shading& r) {
  for (const auto& t : sh)
    if (r.subset_of(t)) return false;
  std::erase_if(sh, [&](const Shading& t) { return t.subset_of(r); });
  sh.push_back(r);
  return true;
}

inline bool is_antichain(std::span<const Shading> sh) {
  for (std::size_t i = 0; i < sh.size(); ++i)
    for (std::size_t j = 0; j < sh.size(); ++j)
      if (i != j && sh[i].subset_of(sh[j])) return false;
  return true;
}

/// Classical pattern -> maximal allowed shadings. A pattern that never
/// occurred maps to an empty collection, which is different from the
/// collection holding only the empty shading.
struct MinedTable {
  std::size_t m = 0;
  std::size_t source_max_len = 0;
  std::map<Permutation, ShadingSet> entries;

  [[nodiscard]] const ShadingSet& at(const Permutation& p) const { return entries.at(p); }

  /// Sorts every antichain by (cell count, mask) so equal tables compare
  /// and serialize identically.
  void normalize() {
    for (auto& [p, sh] : entries) std::sort(sh.begin(), sh.end());
  }

  /// Folds `other` into this table by antichain insertion.
  void merge(const MinedTable& other) {
    m = std::max(m, other.m);
    source_max_len = std::max(source_max_len, other.source_max_len);
    for (const auto& [p, sh] : other.entries) {
      auto& into = entries[p];
      for (const auto& r : sh) antichain_insert(into, r);
    }
    normalize();
  }

  friend bool operator==(const MinedTable&, const MinedTable&) = default;
};

inline MinedTable empty_mined_table(std::size_t m) {
  MinedTable table;
  table.m = m;
  for (std::size_t k = 0; k <= m; ++k)
    for (auto& p : all_permutations(k)) table.entries.emplace(std::move(p), ShadingSet{});
  return table;
}

namespace detail {

inline void mine_into(MinedTable& table, std::span<const Permutation> inputs, std::size_t m) {
  for (const auto& pi : inputs) {
    table.source_max_len = std::max(table.source_max_len, pi.size());
    for_each_subword(pi, m, [&](const Occurrence& pos) {
      const Permutation p = restrict_to(pi, pos);
      antichain_insert(table.entries[p], maximal_shading(pi, pos));
    });
  }
}

}  // namespace detail

/// Records, for every classical pattern p of length at most m, the maximal
/// shadings R such that (p,R) occurs in some permutation of `inputs`.
/// Duplicate inputs are ignored. Work is split across threads and the
/// partial tables are merged; the result does not depend on the schedule.
inline MinedTable mine(std::span<const Permutation> inputs, std::size_t m,
                       std::size_t max_m = kDefaultMaxMineLength) {
  if (m > max_m || m > kMaxShadingLength)
    throw std::invalid_argument("mine: pattern length bound " + std::to_string(m) +
                                " exceeds the cap of " +
                                std::to_string(std::min(max_m, kMaxShadingLength)));

  std::vector<Permutation> unique(inputs.begin(), inputs.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  const std::size_t workers = chunk_count(unique.size(), 256);
  std::vector<MinedTable> partial(workers, empty_mined_table(m));
  parallel_chunks(unique.size(), workers, [&](std::size_t w, std::size_t b, std::size_t e) {
    detail::mine_into(partial[w], std::span(unique).subspan(b, e - b), m);
  });

  MinedTable table = std::move(partial.front());
  for (std::size_t w = 1; w < partial.size(); ++w) table.merge(partial[w]);
  table.m = m;
  table.normalize();
  return table;
}

inline MinedTable mine(std::initializer_list<Permutation> inputs, std::size_t m) {
  return mine(std::span<const Permutation>(inputs.begin(), inputs.size()), m);
}

}  // namespace bisc
