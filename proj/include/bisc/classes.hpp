#pragma once

// Generators for the permutation sets used to exercise the pipeline:
// sorting machines, subgroups of S_n, RSK shape classes and classes given
// by a pattern basis.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bisc/pipeline.hpp"

namespace bisc {

/// One pass through a stack: before pushing each letter, pop every smaller
/// letter off the top; flush the stack at the end.
inline Permutation stack_sort(const Permutation& pi) {
  std::vector<int> stack, out;
  out.reserve(pi.size());
  for (const int x : pi) {
    while (!stack.empty() && stack.back() < x) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  out.insert(out.end(), stack.rbegin(), stack.rend());
  return Permutation::unchecked(std::move(out));
}

/// All permutations of length at most n satisfying `pred`, by (length, lex).
inline std::vector<Permutation> select_up_to(std::size_t n,
                                             const std::function<bool(const Permutation&)>& pred) {
  std::vector<Permutation> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto level = detail::filter_level(len, pred);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

inline std::vector<Permutation> gen_stack_sortable(std::size_t n) {
  return select_up_to(n, [](const Permutation& pi) { return stack_sort(pi).is_identity(); });
}

inline std::vector<Permutation> gen_west2(std::size_t n) {
  return select_up_to(n, [](const Permutation& pi) {
    return stack_sort(stack_sort(pi)).is_identity();
  });
}

namespace detail {

inline bool is_strong_fixed_point(std::span<const int> w, std::size_t i) {
  for (std::size_t j = 0; j < i; ++j)
    if (w[j] > w[i]) return false;
  for (std::size_t j = i + 1; j < w.size(); ++j)
    if (w[j] < w[i]) return false;
  return true;
}

inline void quicksort_pass_into(std::span<const int> w, std::vector<int>& out) {
  if (w.empty()) return;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (is_strong_fixed_point(w, i)) {
      quicksort_pass_into(w.first(i), out);
      out.push_back(w[i]);
      quicksort_pass_into(w.subspan(i + 1), out);
      return;
    }
  }
  // No strong fixed point: letters smaller than the first one move to the
  // front, which makes the first letter a strong fixed point. The pass ends
  // here for this factor.
  const int pivot = w.front();
  for (const int x : w)
    if (x < pivot) out.push_back(x);
  for (const int x : w)
    if (x >= pivot) out.push_back(x);
}

}  // namespace detail

/// One pass of the single-pass quicksort operator: split at the right-most
/// strong fixed point and recurse on both sides, or partition around the
/// first letter when there is none.
inline Permutation quicksort_pass(const Permutation& pi) {
  std::vector<int> out;
  out.reserve(pi.size());
  detail::quicksort_pass_into(pi.view(), out);
  return Permutation::unchecked(std::move(out));
}

inline std::vector<Permutation> gen_quicksortable(std::size_t n) {
  return select_up_to(n, [](const Permutation& pi) { return quicksort_pass(pi).is_identity(); });
}

/// Rotations and reflections of the regular l-gon with vertices 1..l in
/// cyclic order, for every l <= n.
inline std::vector<Permutation> gen_dihedral(std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t len = 0; len <= n; ++len) {
    std::set<Permutation> level;
    if (len == 0) level.insert(Permutation{});
    const auto l = static_cast<long>(len);
    for (long k = 0; k < l; ++k) {
      std::vector<int> rot(len), ref(len);
      for (long i = 1; i <= l; ++i) {
        rot[i - 1] = static_cast<int>(((i - 1 + k) % l + l) % l + 1);
        ref[i - 1] = static_cast<int>(((k - i) % l + l) % l + 1);
      }
      level.insert(Permutation::unchecked(rot));
      level.insert(Permutation::unchecked(ref));
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Even permutations of every length up to n.
inline std::vector<Permutation> gen_alternating(std::size_t n) {
  return select_up_to(n, [](const Permutation& pi) { return pi.inversions() % 2 == 0; });
}

/// Young diagram as weakly decreasing row lengths.
class YoungShape {
public:
  YoungShape() = default;
  explicit YoungShape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1]))
        throw std::invalid_argument("not a partition");
  }
  YoungShape(std::initializer_list<int> rows) : YoungShape(std::vector<int>(rows)) {}

  /// "3,2", "(3,2)" or "32".
  static YoungShape parse(std::string_view text) {
    std::vector<int> rows;
    const bool separated = text.find(',') != std::string_view::npos;
    int cur = -1;
    for (const char c : text) {
      if (c >= '0' && c <= '9') {
        if (separated)
          cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        else
          rows.push_back(c - '0');
      } else if (c == ',') {
        if (cur < 0) throw std::invalid_argument("bad shape: " + std::string(text));
        rows.push_back(cur);
        cur = -1;
      } else if (c != '(' && c != ')' && c != ' ') {
        throw std::invalid_argument("bad shape: " + std::string(text));
      }
    }
    if (cur >= 0) rows.push_back(cur);
    if (rows.empty()) throw std::invalid_argument("bad shape: " + std::string(text));
    return YoungShape(std::move(rows));
  }

  [[nodiscard]] const std::vector<int>& rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cells() const {
    std::size_t n = 0;
    for (const int r : rows_) n += static_cast<std::size_t>(r);
    return n;
  }
  /// Diagram containment: every row of `other` fits in the matching row.
  [[nodiscard]] bool contains(const YoungShape& other) const {
    if (other.rows_.size() > rows_.size()) return false;
    for (std::size_t i = 0; i < other.rows_.size(); ++i)
      if (rows_[i] < other.rows_[i]) return false;
    return true;
  }
  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
    return s + ")";
  }

  friend bool operator==(const YoungShape&, const YoungShape&) = default;

private:
  std::vector<int> rows_;
};

/// Shape of the RSK insertion tableau (Schensted row insertion).
inline YoungShape rsk_shape(const Permutation& pi) {
  std::vector<std::vector<int>> tableau;
  for (int x : pi) {
    for (std::size_t r = 0;; ++r) {
      if (r == tableau.size()) {
        tableau.push_back({x});
        break;
      }
      auto& row = tableau[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  std::vector<int> rows;
  for (const auto& row : tableau) rows.push_back(static_cast<int>(row.size()));
  return YoungShape(std::move(rows));
}

inline std::vector<Permutation> gen_shape_avoiders(const YoungShape& shape, std::size_t n) {
  return select_up_to(n, [&](const Permutation& pi) { return !rsk_shape(pi).contains(shape); });
}

/// Output of the restricted stack: letters are pushed left to right, and
/// before a push that would make the stack, read top to bottom, contain
/// `sigma`, the top is popped to the output until the push is legal.
inline Permutation restricted_stack_pass(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> stack, out;
  auto would_contain = [&](int x) {
    std::vector<int> word{x};
    word.insert(word.end(), stack.rbegin(), stack.rend());
    return contains(flatten(word), sigma);
  };
  for (const int x : pi) {
    while (!stack.empty() && would_contain(x)) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  out.insert(out.end(), stack.rbegin(), stack.rend());
  return Permutation::unchecked(std::move(out));
}

/// Permutations sorted by a sigma-avoiding stack followed by an ordinary
/// sorting stack in series.
inline std::vector<Permutation> restricted_stack_sortable(const Permutation& sigma, std::size_t n) {
  if (sigma.empty()) throw std::invalid_argument("restricted stack: empty restriction");
  return select_up_to(n, [&](const Permutation& pi) {
    return stack_sort(restricted_stack_pass(pi, sigma)).is_identity();
  });
}

/// Av(patterns) of every length up to n.
inline std::vector<Permutation> gen_by_avoidance(std::span<const MeshPattern> patterns,
                                                 std::size_t n,
                                                 std::size_t cap = kDefaultAvoidersCap) {
  return avoiders(patterns, n, cap).flat();
}

/// Bases of the classes generated by avoidance.
inline std::vector<MeshPattern> named_basis(std::string_view name) {
  if (name == "smooth") return parse_pattern_list("1324, 2143");
  if (name == "forestlike" || name == "forest-like")
    return parse_pattern_list("1324, (2143, {(2,2)})");
  if (name == "baxter") return parse_pattern_list("(2413, {(2,2)}), (3142, {(2,2)})");
  if (name == "simsun") return parse_pattern_list("(321, {(1,0), (1,1), (2,2)})");
  throw std::invalid_argument("unknown class: " + std::string(name));
}

/// Registry entry point. Recognized specs: stack_sortable, west2,
/// quicksort1, dihedral, alternating, smooth, forestlike, baxter, simsun,
/// rsk_avoid:<shape>, restricted_stack:<sigma>, avoid:<pattern list>.
inline std::vector<Permutation> generate_class(std::string_view spec, std::size_t n,
                                               std::size_t cap = kDefaultAvoidersCap) {
  if (n > cap)
    throw LimitError("class generation: length " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(cap));
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (name == "stack_sortable") return gen_stack_sortable(n);
  if (name == "west2") return gen_west2(n);
  if (name == "quicksort1") return gen_quicksortable(n);
  if (name == "dihedral") return gen_dihedral(n);
  if (name == "alternating") return gen_alternating(n);
  if (name == "rsk_avoid") return gen_shape_avoiders(YoungShape::parse(arg), n);
  if (name == "restricted_stack") return restricted_stack_sortable(Permutation::parse(arg), n);
  if (name == "avoid") {
    const auto pats = parse_pattern_list(arg);
    return gen_by_avoidance(pats, n, cap);
  }
  const auto pats = named_basis(name);
  return gen_by_avoidance(pats, n, cap);
}

}  // namespace bisc
