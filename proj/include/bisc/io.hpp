#pragma once

// Reading permutation files and writing tables and bases as JSON, text,
// ASCII grids and TikZ.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisc/gen.hpp"
#include "bisc/mine.hpp"
#include "bisc/pipeline.hpp"

namespace bisc {

using ordered_json = nlohmann::ordered_json;

/// Malformed text input; the message carries the line number when known.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Permutation files

/// One permutation per line. Blank lines and '#' comments are skipped and
/// "eps" stands for the empty permutation.
inline std::vector<Permutation> read_permutations(std::istream& in) {
  std::vector<Permutation> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Permutation::parse(line));
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<Permutation> read_permutation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_permutations(in);
}

inline void write_permutations(std::ostream& os, std::span<const Permutation> perms) {
  for (const auto& p : perms) os << p.str() << '\n';
}

// ---------------------------------------------------------------------------
// JSON

inline ordered_json shading_to_json(const Shading& sh) {
  ordered_json cells = ordered_json::array();
  for (const auto c : sh.cells()) cells.push_back({c.col, c.row});
  return cells;
}

inline Shading shading_from_json(std::size_t k, const ordered_json& j) {
  Shading sh(k);
  for (const auto& cell : j) {
    const Cell c{cell.at(0).get<int>(), cell.at(1).get<int>()};
    if (!sh.in_bounds(c)) throw ParseError("cell out of bounds in JSON shading");
    sh.insert(c);
  }
  return sh;
}

namespace detail {

inline ordered_json table_to_json(std::size_t m, const std::map<Permutation, ShadingSet>& entries,
                                  const char* key) {
  ordered_json j;
  j["m"] = m;
  ordered_json list = ordered_json::array();
  for (const auto& [p, shadings] : entries) {
    ordered_json e;
    e["pattern"] = p.str();
    ordered_json arr = ordered_json::array();
    for (const auto& sh : shadings) arr.push_back(shading_to_json(sh));
    e[key] = std::move(arr);
    list.push_back(std::move(e));
  }
  j["entries"] = std::move(list);
  return j;
}

inline std::map<Permutation, ShadingSet> table_from_json(const ordered_json& j, const char* key) {
  std::map<Permutation, ShadingSet> entries;
  for (const auto& e : j.at("entries")) {
    const auto p = Permutation::parse(e.at("pattern").get<std::string>());
    ShadingSet shadings;
    for (const auto& sh : e.at(key)) shadings.push_back(shading_from_json(p.size(), sh));
    entries.emplace(p, std::move(shadings));
  }
  return entries;
}

}  // namespace detail

inline ordered_json to_json(const MinedTable& t) {
  return detail::table_to_json(t.m, t.entries, "shadings");
}

inline ordered_json to_json(const ForbiddenTable& t) {
  return detail::table_to_json(t.m, t.entries, "forbidden");
}

inline ordered_json to_json(const Basis& b) {
  ordered_json j;
  j["m"] = b.m;
  j["N"] = b.N;
  j["pruned"] = b.pruned;
  ordered_json list = ordered_json::array();
  for (const auto& mp : b.patterns) {
    ordered_json e;
    e["pattern"] = mp.pattern.str();
    e["shading"] = shading_to_json(mp.shading);
    list.push_back(std::move(e));
  }
  j["patterns"] = std::move(list);
  return j;
}

inline MinedTable mined_table_from_json(const ordered_json& j) {
  MinedTable t;
  t.m = j.at("m").get<std::size_t>();
  t.entries = detail::table_from_json(j, "shadings");
  for (const auto& [p, sh] : t.entries)
    if (!sh.empty()) t.source_max_len = std::max(t.source_max_len, p.size());
  t.normalize();
  return t;
}

inline ForbiddenTable forbidden_table_from_json(const ordered_json& j) {
  ForbiddenTable t;
  t.m = j.at("m").get<std::size_t>();
  t.entries = detail::table_from_json(j, "forbidden");
  return t;
}

inline Basis basis_from_json(const ordered_json& j) {
  Basis b;
  b.m = j.at("m").get<std::size_t>();
  b.N = j.at("N").get<std::size_t>();
  b.pruned = j.at("pruned").get<bool>();
  for (const auto& e : j.at("patterns")) {
    const auto p = Permutation::parse(e.at("pattern").get<std::string>());
    b.patterns.emplace_back(p, shading_from_json(p.size(), e.at("shading")));
  }
  return b;
}

/// Compact single-line JSON followed by a newline; byte-stable for a given
/// value.
inline std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

// ---------------------------------------------------------------------------
// Text: one mesh pattern per line

inline std::string render_text(const Basis& b) {
  std::string out;
  for (const auto& mp : b.patterns) out += mp.str() + "\n";
  return out;
}

/// Inverse of render_text. Blank lines and lines starting with '#' are
/// skipped.
inline std::vector<MeshPattern> parse_text_patterns(std::istream& in) {
  std::vector<MeshPattern> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    try {
      out.push_back(MeshPattern::parse(line));
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ASCII grid
//
// A length-k pattern becomes 2k+1 rows of 2k+1 characters, top row first.
// Even (x,y) hold cell (x/2, y/2): '#' shaded, '.' not. Odd (x,y) are
// lattice points: '*' for a pattern entry, '+' otherwise. The remaining
// positions draw the grid lines with '|' and '-'.
//
//   .|.|#
//   -+-*-
//   .|.|.
//   -*-+-
//   #|.|.      (12, {(0,0), (2,2)})

inline std::string render_ascii(const MeshPattern& mp) {
  const std::size_t k = mp.length();
  const std::size_t w = 2 * k + 1;
  std::string out;
  for (std::size_t yy = w; yy-- > 0;) {
    for (std::size_t x = 0; x < w; ++x) {
      if (x % 2 == 0 && yy % 2 == 0) {
        out += mp.shading.contains({static_cast<int>(x / 2), static_cast<int>(yy / 2)}) ? '#' : '.';
      } else if (x % 2 == 1 && yy % 2 == 1) {
        out += mp.pattern[x / 2] == static_cast<int>(yy / 2) + 1 ? '*' : '+';
      } else {
        out += x % 2 == 1 ? '|' : '-';
      }
    }
    out += '\n';
  }
  return out;
}

/// Patterns separated by one blank line.
inline std::string render_ascii(const Basis& b) {
  std::string out;
  for (std::size_t i = 0; i < b.patterns.size(); ++i) {
    if (i > 0) out += '\n';
    out += render_ascii(b.patterns[i]);
  }
  return out;
}

inline MeshPattern parse_ascii_pattern(const std::vector<std::string>& rows) {
  const std::size_t w = rows.size();
  if (w % 2 == 0) throw ParseError("ascii grid: even number of rows");
  const std::size_t k = (w - 1) / 2;
  std::vector<int> values(k, 0);
  Shading sh(k);
  for (std::size_t r = 0; r < w; ++r) {
    const auto& row = rows[r];
    if (row.size() != w) throw ParseError("ascii grid: ragged row");
    const std::size_t yy = w - 1 - r;
    for (std::size_t x = 0; x < w; ++x) {
      const char c = row[x];
      if (x % 2 == 0 && yy % 2 == 0) {
        if (c == '#')
          sh.insert({static_cast<int>(x / 2), static_cast<int>(yy / 2)});
        else if (c != '.')
          throw ParseError("ascii grid: bad cell character");
      } else if (x % 2 == 1 && yy % 2 == 1) {
        if (c == '*') {
          if (values[x / 2] != 0) throw ParseError("ascii grid: two points in a column");
          values[x / 2] = static_cast<int>(yy / 2) + 1;
        } else if (c != '+') {
          throw ParseError("ascii grid: bad lattice character");
        }
      }
    }
  }
  try {
    return {Permutation(std::move(values)), sh};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("ascii grid: ") + e.what());
  }
}

/// Inverse of render_ascii(Basis). Lines starting with '%' are skipped.
inline std::vector<MeshPattern> parse_ascii_patterns(std::istream& in) {
  std::vector<MeshPattern> out;
  std::vector<std::string> block;
  std::string line;
  auto flush = [&] {
    if (!block.empty()) out.push_back(parse_ascii_pattern(block));
    block.clear();
  };
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line.front() == '%') continue;
    if (line.empty())
      flush();
    else
      block.push_back(line);
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// TikZ

inline std::string render_tikz(const MeshPattern& mp) {
  const std::size_t k = mp.length();
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.4]\n";
  for (const auto c : mp.shading.cells())
    os << "  \\fill[gray!40] (" << c.col << "," << c.row << ") rectangle (" << c.col + 1 << ","
       << c.row + 1 << ");\n";
  for (std::size_t i = 1; i <= k; ++i) {
    os << "  \\draw (" << i << ",0) -- (" << i << "," << k + 1 << ");\n";
    os << "  \\draw (0," << i << ") -- (" << k + 1 << "," << i << ");\n";
  }
  for (std::size_t i = 1; i <= k; ++i)
    os << "  \\fill (" << i << "," << mp.pattern[i - 1] << ") circle (6pt);\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

inline std::string render_tikz(const Basis& b) {
  std::string out;
  for (const auto& mp : b.patterns) out += "% " + mp.str() + "\n" + render_tikz(mp);
  return out;
}

}  // namespace bisc
