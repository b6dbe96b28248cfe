#pragma once

// Mesh patterns: shadings over the (k+1)x(k+1) grid of a length-k pattern,
// region counts, maximal shadings, containment and pattern-in-pattern
// implication.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bisc/permutation.hpp"

namespace bisc {

/// Longest pattern whose grid fits in a 64-bit shading mask.
inline constexpr std::size_t kMaxShadingLength = 7;

/// Grid cell (col,row) of a length-k pattern, 0 <= col,row <= k. Column i
/// lies between pattern positions i and i+1, row j between the j-th and
/// (j+1)-th smallest values (with sentinels 0 and k+1).
struct Cell {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Set of cells of a fixed length-k grid, stored as a bitmask with bit
/// col*(k+1)+row, so ascending bits are column-major cell order.
class Shading {
public:
  using Mask = std::uint64_t;

  Shading() = default;
  explicit Shading(std::size_t k, Mask bits = 0) : k_(k), bits_(bits) {
    if (k > kMaxShadingLength)
      throw std::invalid_argument("pattern too long for a shading mask");
    bits_ &= full_mask(k);
  }
  Shading(std::size_t k, std::initializer_list<Cell> cells) : Shading(k) {
    for (const auto c : cells) insert(c);
  }

  static Shading full(std::size_t k) { return Shading(k, full_mask(k)); }

  static constexpr Mask full_mask(std::size_t k) noexcept {
    const std::size_t n = (k + 1) * (k + 1);
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  [[nodiscard]] std::size_t length() const noexcept { return k_; }
  [[nodiscard]] Mask bits() const noexcept { return bits_; }
  [[nodiscard]] std::size_t cell_count() const noexcept { return (k_ + 1) * (k_ + 1); }
  [[nodiscard]] std::size_t size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] bool is_full() const noexcept { return bits_ == full_mask(k_); }

  [[nodiscard]] bool in_bounds(Cell c) const noexcept {
    return c.col >= 0 && c.row >= 0 && c.col <= static_cast<int>(k_) &&
           c.row <= static_cast<int>(k_);
  }
  [[nodiscard]] std::size_t index(Cell c) const {
    if (!in_bounds(c)) throw std::invalid_argument("cell out of bounds");
    return static_cast<std::size_t>(c.col) * (k_ + 1) + static_cast<std::size_t>(c.row);
  }
  [[nodiscard]] Cell cell_at(std::size_t bit) const noexcept {
    return {static_cast<int>(bit / (k_ + 1)), static_cast<int>(bit % (k_ + 1))};
  }

  [[nodiscard]] bool contains(Cell c) const { return (bits_ >> index(c)) & 1u; }
  void insert(Cell c) { bits_ |= Mask{1} << index(c); }
  void erase(Cell c) { bits_ &= ~(Mask{1} << index(c)); }

  [[nodiscard]] bool subset_of(const Shading& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] Shading complement() const { return Shading(k_, ~bits_); }

  /// Cells in column-major order.
  [[nodiscard]] std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(cell_at(std::countr_zero(b)));
    return out;
  }

  friend bool operator==(const Shading&, const Shading&) = default;

  /// Output order: fewer cells first, then by mask value.
  friend std::strong_ordering operator<=>(const Shading& a, const Shading& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

private:
  std::size_t k_ = 0;
  Mask bits_ = 0;
};

struct MeshPattern {
  Permutation pattern;
  Shading shading;

  MeshPattern() = default;
  explicit MeshPattern(Permutation p) : pattern(std::move(p)), shading(pattern.size()) {}
  MeshPattern(Permutation p, Shading s) : pattern(std::move(p)), shading(s) {
    if (shading.length() != pattern.size())
      throw std::invalid_argument("shading does not match pattern length");
  }
  MeshPattern(Permutation p, std::initializer_list<Cell> cells)
      : MeshPattern(p, Shading(p.size(), cells)) {}

  [[nodiscard]] std::size_t length() const noexcept { return pattern.size(); }
  [[nodiscard]] bool is_classical() const noexcept { return shading.empty(); }

  /// "(3241, {(1,4)})", or the bare permutation when no cell is shaded.
  [[nodiscard]] std::string str() const;
  static MeshPattern parse(std::string_view text);

  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;
  friend std::strong_ordering operator<=>(const MeshPattern& a, const MeshPattern& b) {
    if (auto c = a.pattern <=> b.pattern; c != 0) return c;
    return a.shading <=> b.shading;
  }
};

inline std::ostream& operator<<(std::ostream& os, const MeshPattern& mp) {
  return os << mp.str();
}

// ---------------------------------------------------------------------------
// Region semantics

/// Mask (over the grid of the occurrence's pattern) of the cells whose
/// region in `host` holds at least one host point.
inline Shading::Mask occupied_cells(const Permutation& host, const Occurrence& occ) {
  const std::size_t k = occ.size();
  std::vector<int> occ_values;
  occ_values.reserve(k);
  for (const auto i : occ) occ_values.push_back(host[i]);
  std::sort(occ_values.begin(), occ_values.end());

  Shading::Mask mask = 0;
  std::size_t col = 0;
  for (std::size_t x = 0; x < host.size(); ++x) {
    if (col < k && occ[col] == x) {
      ++col;
      continue;
    }
    const auto row = static_cast<std::size_t>(
        std::lower_bound(occ_values.begin(), occ_values.end(), host[x]) - occ_values.begin());
    mask |= Shading::Mask{1} << (col * (k + 1) + row);
  }
  return mask;
}

/// Number of host points strictly inside the region of `cell` for the
/// occurrence `occ`.
inline std::size_t region_points(const Permutation& host, const Occurrence& occ, Cell cell) {
  const auto k = static_cast<int>(occ.size());
  if (cell.col < 0 || cell.row < 0 || cell.col > k || cell.row > k)
    throw std::invalid_argument("region_points: cell out of bounds");
  for (std::size_t i = 0; i < occ.size(); ++i)
    if (occ[i] >= host.size() || (i > 0 && occ[i] <= occ[i - 1]))
      throw std::invalid_argument("region_points: invalid occurrence");

  std::vector<int> occ_values;
  for (const auto i : occ) occ_values.push_back(host[i]);
  std::sort(occ_values.begin(), occ_values.end());

  const auto n = static_cast<long>(host.size());
  // 1-based positions and values with sentinels 0 and n+1
  const long left = cell.col == 0 ? 0 : static_cast<long>(occ[cell.col - 1]) + 1;
  const long right = cell.col == k ? n + 1 : static_cast<long>(occ[cell.col]) + 1;
  const long low = cell.row == 0 ? 0 : occ_values[cell.row - 1];
  const long high = cell.row == k ? n + 1 : occ_values[cell.row];

  std::size_t count = 0;
  for (long x = left + 1; x < right; ++x) {
    const long v = host[static_cast<std::size_t>(x - 1)];
    if (low < v && v < high) ++count;
  }
  return count;
}

/// The largest shading R such that `occ` is still an occurrence of (p,R).
inline Shading maximal_shading(const Permutation& host, const Occurrence& occ) {
  return Shading(occ.size(), ~occupied_cells(host, occ));
}

inline bool mesh_contains(const Permutation& host, const MeshPattern& mp) {
  const auto required = mp.shading.bits();
  return for_each_occurrence(host, mp.pattern, [&](const Occurrence& occ) {
    return (occupied_cells(host, occ) & required) == 0;
  });
}

inline bool avoids_all(const Permutation& host, std::span<const MeshPattern> patterns) {
  for (const auto& mp : patterns)
    if (mesh_contains(host, mp)) return false;
  return true;
}

/// Sufficient condition for "every permutation containing `outer` also
/// contains `inner`": some occurrence of inner.pattern in outer.pattern maps
/// every shaded inner cell onto a region of the outer grid that holds no
/// outer point and consists of shaded outer cells only.
inline bool mesh_implies(const MeshPattern& inner, const MeshPattern& outer) {
  const std::size_t j = inner.length();
  const std::size_t k = outer.length();
  if (j > k) return false;
  const auto& p = outer.pattern;
  const auto outer_bits = outer.shading.bits();
  const auto wanted = inner.shading.bits();

  return for_each_occurrence(p, inner.pattern, [&](const Occurrence& occ) {
    std::vector<std::size_t> vals;  // sorted 1-based occurrence values
    for (const auto i : occ) vals.push_back(static_cast<std::size_t>(p[i]));
    std::sort(vals.begin(), vals.end());

    for (Shading::Mask b = wanted; b != 0; b &= b - 1) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(b));
      const std::size_t a = bit / (j + 1);
      const std::size_t r = bit % (j + 1);
      // outer grid columns [c0, c1) and rows [r0, r1) covered by inner cell (a,r)
      const std::size_t c0 = a == 0 ? 0 : occ[a - 1] + 1;
      const std::size_t c1 = a == j ? k + 1 : occ[a] + 1;
      const std::size_t r0 = r == 0 ? 0 : vals[r - 1];
      const std::size_t r1 = r == j ? k + 1 : vals[r];
      for (std::size_t x = c0; x < c1; ++x) {
        // point of the outer pattern at 1-based position x, strictly inside
        if (x > c0 && static_cast<std::size_t>(p[x - 1]) > r0 &&
            static_cast<std::size_t>(p[x - 1]) < r1)
          return false;
        for (std::size_t y = r0; y < r1; ++y)
          if (!((outer_bits >> (x * (k + 1) + y)) & 1u)) return false;
      }
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Text grammar: "(<perm>, {(<col>,<row>), ...})" or a bare permutation.

inline std::string MeshPattern::str() const {
  if (shading.empty()) return pattern.str();
  std::string out = "(" + pattern.str() + ", {";
  bool first = true;
  for (const auto c : shading.cells()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
  }
  return out + "})";
}

namespace detail {

class Scanner {
public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  std::string_view until_comma_or_close() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
    return s_.substr(start, pos_ - start);
  }
  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad mesh pattern '" + std::string(s_) + "': " + what);
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MeshPattern MeshPattern::parse(std::string_view text) {
  detail::Scanner sc(text);
  if (!sc.eat('(')) return MeshPattern(Permutation::parse(text));

  // Permutations with more than nine letters use spaces inside the tuple.
  const Permutation p = Permutation::parse(sc.until_comma_or_close());
  Shading sh(p.size());
  if (sc.eat(',')) {
    sc.expect('{');
    if (!sc.eat('}')) {
      do {
        sc.expect('(');
        const int col = sc.integer();
        sc.expect(',');
        const int row = sc.integer();
        sc.expect(')');
        if (!sh.in_bounds({col, row})) sc.fail("cell out of bounds");
        sh.insert({col, row});
      } while (sc.eat(','));
      sc.expect('}');
    }
  }
  sc.expect(')');
  if (!sc.done()) sc.fail("trailing characters");
  return {p, sh};
}

/// Splits a list of mesh patterns at top-level commas or semicolons, e.g.
/// "1324, (2143, {(2,2)})".
inline std::vector<MeshPattern> parse_pattern_list(std::string_view text) {
  std::vector<MeshPattern> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    auto piece = text.substr(start, end - start);
    while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t')) piece.remove_prefix(1);
    while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t')) piece.remove_suffix(1);
    if (!piece.empty()) out.push_back(MeshPattern::parse(piece));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && (c == ',' || c == ';')) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

}  // namespace bisc
