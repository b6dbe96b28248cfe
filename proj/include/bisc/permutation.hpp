#pragma once

// Permutations in one-line notation, flattening, subwords and classical
// pattern occurrences.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bisc {

/// A bijection on {1,...,n} stored as its one-line notation.
///
/// Ordering is by length first and then lexicographic, which is the order
/// used for every table and basis the library prints.
class Permutation {
public:
  Permutation() = default;

  /// Validating constructor; throws std::invalid_argument unless `values`
  /// is a bijection on 1..n.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (const int v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v])
        throw std::invalid_argument("not a permutation: " + raw_string());
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  /// Skips validation. The caller guarantees the bijection invariant.
  static Permutation unchecked(std::vector<int> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return unchecked(std::move(v));
  }

  /// Parses the text form: a digit string for n <= 9 ("35241"), space or
  /// comma separated integers otherwise, and "eps" (or "ε" or "") for the
  /// empty permutation.
  static Permutation parse(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t i) const noexcept { return values_[i]; }
  [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }
  [[nodiscard]] std::span<const int> view() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  [[nodiscard]] bool is_identity() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
      inv[values_[i] - 1] = static_cast<int>(i) + 1;
    return unchecked(std::move(inv));
  }

  [[nodiscard]] std::size_t inversions() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
      for (std::size_t j = i + 1; j < values_.size(); ++j)
        if (values_[i] > values_[j]) ++count;
    return count;
  }

  /// "35241" for n <= 9, "1 2 ... 10" beyond, "eps" for the empty permutation.
  [[nodiscard]] std::string str() const {
    if (values_.empty()) return "eps";
    return raw_string();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.values_ <=> b.values_;
  }

private:
  std::string raw_string() const {
    std::ostringstream os;
    const bool digits = values_.size() <= 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!digits && i > 0) os << ' ';
      os << values_[i];
    }
    return os.str();
  }

  std::vector<int> values_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.str();
}

inline Permutation Permutation::parse(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty() || text == "eps" || text == "ε" || text == "e") return {};

  std::vector<int> values;
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!separated) {
    for (const char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad permutation text: " + std::string(text));
      values.push_back(c - '0');
    }
  } else {
    int current = -1;
    for (const char c : text) {
      if (c >= '0' && c <= '9') {
        current = (current < 0 ? 0 : current * 10) + (c - '0');
      } else if (c == ' ' || c == ',' || c == '\t') {
        if (current >= 0) values.push_back(current);
        current = -1;
      } else {
        throw std::invalid_argument("bad permutation text: " + std::string(text));
      }
    }
    if (current >= 0) values.push_back(current);
  }
  return Permutation(std::move(values));
}

/// Replaces the i-th smallest letter of `word` by i.
/// Throws std::invalid_argument on repeated letters.
inline Permutation flatten(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]])
      throw std::invalid_argument("flatten: repeated letter");
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation::unchecked(std::move(out));
}

inline Permutation flatten(std::initializer_list<int> word) {
  return flatten(std::span<const int>(word.begin(), word.size()));
}

/// Zero-based, strictly increasing positions into a host permutation.
using Occurrence = std::vector<std::size_t>;

inline Permutation restrict_to(const Permutation& host, const Occurrence& positions) {
  std::vector<int> word;
  word.reserve(positions.size());
  for (const auto i : positions) word.push_back(host[i]);
  return flatten(word);
}

/// Calls `visit(positions)` for every subsequence of `pi` of length at most
/// `m`, longest first and lexicographically by position within a length.
/// The empty subword is visited last.
template <class Visit>
void for_each_subword(const Permutation& pi, std::size_t m, Visit&& visit) {
  const std::size_t n = pi.size();
  Occurrence pos;
  for (std::size_t len = std::min(m, n) + 1; len-- > 0;) {
    pos.resize(len);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    while (true) {
      visit(std::as_const(pos));
      // advance to the next combination
      std::size_t i = len;
      while (i > 0 && pos[i - 1] == n - len + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < len; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
}

struct Subword {
  std::vector<int> values;
  Occurrence positions;
};

inline std::vector<Subword> subwords_le_m(const Permutation& pi, std::size_t m) {
  std::vector<Subword> out;
  for_each_subword(pi, m, [&](const Occurrence& pos) {
    Subword s{{}, pos};
    for (const auto i : pos) s.values.push_back(pi[i]);
    out.push_back(std::move(s));
  });
  return out;
}

namespace detail {

template <class Visit>
bool occurrences_rec(const Permutation& host, const Permutation& p, Occurrence& pos,
                     std::size_t start, Visit& visit) {
  const std::size_t depth = pos.size();
  if (depth == p.size()) return visit(std::as_const(pos));
  const std::size_t remaining = p.size() - depth;
  for (std::size_t x = start; x + remaining <= host.size(); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i)
      ok = (host[pos[i]] < host[x]) == (p[i] < p[depth]);
    if (!ok) continue;
    pos.push_back(x);
    const bool stop = occurrences_rec(host, p, pos, x + 1, visit);
    pos.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace detail

/// Calls `visit(positions)` for every occurrence of `p` in `host`, in
/// lexicographic order of positions. Enumeration stops early as soon as
/// `visit` returns true; the function then returns true.
template <class Visit>
bool for_each_occurrence(const Permutation& host, const Permutation& p, Visit&& visit) {
  if (p.size() > host.size()) return false;
  Occurrence pos;
  pos.reserve(p.size());
  return detail::occurrences_rec(host, p, pos, 0, visit);
}

inline std::vector<Occurrence> classical_occurrences(const Permutation& host,
                                                     const Permutation& p) {
  std::vector<Occurrence> out;
  for_each_occurrence(host, p, [&](const Occurrence& o) {
    out.push_back(o);
    return false;
  });
  return out;
}

inline bool contains(const Permutation& host, const Permutation& p) {
  return for_each_occurrence(host, p, [](const Occurrence&) { return true; });
}

/// All permutations of length exactly n in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation::unchecked(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// All permutations of length at most n, ordered by length then lex.
inline std::vector<Permutation> all_permutations_up_to(std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto level = all_permutations(len);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace bisc

template <>
struct std::hash<bisc::Permutation> {
  std::size_t operator()(const bisc::Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (const int v : p) h = h * 1315423911u + static_cast<std::size_t>(v);
    return h;
  }
};
