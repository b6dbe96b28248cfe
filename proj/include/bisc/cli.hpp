#pragma once

// Command execution behind the `bisc` tool, kept separate from argument
// parsing so it can be driven directly from tests.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bisc/classes.hpp"
#include "bisc/io.hpp"

namespace bisc::cli {

enum class Command { Mine, Bisc, Avoiders, Verify, Classgen };
enum class Format { Text, Json, Ascii, Tikz };

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kLimitExceeded = 3 };

struct RunConfig {
  Command command = Command::Bisc;
  std::optional<std::string> input;       // permutation file
  std::optional<std::string> class_spec;  // registry spec, e.g. "west2"
  std::size_t len = 5;                    // class generation length
  std::size_t m = 4;
  std::optional<std::size_t> n;           // verify / prune horizon
  std::optional<std::string> patterns;    // inline pattern list
  std::optional<std::string> basis_file;  // text or JSON basis
  Format format = Format::Text;
  bool prune = false;
  std::size_t cap = kDefaultAvoidersCap;
};

inline Command parse_command(std::string_view s) {
  if (s == "mine") return Command::Mine;
  if (s == "bisc") return Command::Bisc;
  if (s == "avoiders") return Command::Avoiders;
  if (s == "verify") return Command::Verify;
  if (s == "classgen") return Command::Classgen;
  throw std::invalid_argument("unknown command: " + std::string(s));
}

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "ascii") return Format::Ascii;
  if (s == "tikz") return Format::Tikz;
  throw std::invalid_argument("unknown format: " + std::string(s));
}

namespace detail {

inline std::vector<Permutation> load_inputs(const RunConfig& cfg) {
  if (cfg.input && cfg.class_spec)
    throw std::invalid_argument("give either --input or --class, not both");
  if (cfg.input) return read_permutation_file(*cfg.input);
  if (cfg.class_spec) return generate_class(*cfg.class_spec, cfg.len, cfg.cap);
  throw std::invalid_argument("an input set is required (--input FILE or --class SPEC)");
}

inline Basis load_basis(const RunConfig& cfg) {
  if (cfg.patterns && cfg.basis_file)
    throw std::invalid_argument("give either --patterns or --basis, not both");
  if (cfg.patterns) return make_basis(parse_pattern_list(*cfg.patterns));
  if (!cfg.basis_file) throw std::invalid_argument("a basis is required (--patterns or --basis)");

  std::ifstream in(*cfg.basis_file);
  if (!in) throw ParseError("cannot open " + *cfg.basis_file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return basis_from_json(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("basis JSON: ") + e.what());
    }
  }
  std::istringstream lines(text);
  return make_basis(parse_text_patterns(lines));
}

inline std::string render_basis(const Basis& b, Format f) {
  switch (f) {
    case Format::Json: return dump(to_json(b));
    case Format::Ascii: return render_ascii(b);
    case Format::Tikz: return render_tikz(b);
    case Format::Text: break;
  }
  return render_text(b);
}

/// Comment prefix that the matching parser skips.
inline const char* comment_prefix(Format f) {
  return (f == Format::Ascii || f == Format::Tikz) ? "% " : "# ";
}

inline std::string render_report(const EqualityReport& r, std::size_t n) {
  std::string s = "verify n=" + std::to_string(n) + ": ";
  if (r.equal) return s + "ok";
  return s + "FAILED, first difference " + r.counterexample->str();
}

inline int run_mine(const RunConfig& cfg, std::ostream& out) {
  const auto inputs = load_inputs(cfg);
  const auto table = mine(inputs, cfg.m);
  if (cfg.format == Format::Json) {
    out << dump(to_json(table));
    return kOk;
  }
  if (cfg.format != Format::Text) throw std::invalid_argument("mine supports text and json output");
  std::string never;
  for (const auto& [p, sh] : table.entries) {
    if (sh.empty()) never += " " + p.str();
    for (const auto& r : sh) out << MeshPattern(p, r).str() << '\n';
  }
  if (!never.empty()) out << "# never occurring:" << never << '\n';
  return kOk;
}

inline int run_bisc(const RunConfig& cfg, std::ostream& out) {
  const auto inputs = load_inputs(cfg);
  Basis basis = bisc(inputs, cfg.m);
  const std::size_t horizon = cfg.n.value_or(basis.N);

  // Pruning needs the learned basis to describe the input at the horizon;
  // when it does not, the raw basis is printed with the failed check.
  std::optional<EqualityReport> report;
  if (cfg.n || cfg.prune) report = verify_equality(inputs, basis, horizon, cfg.cap);
  if (cfg.prune && report->equal) basis = prune(basis, inputs, horizon, cfg.cap);
  if (!cfg.n && report && report->equal) report.reset();

  if (cfg.format == Format::Json) {
    auto j = to_json(basis);
    if (report) {
      j["verify"] = {{"n", horizon}, {"equal", report->equal}};
      if (report->counterexample) j["verify"]["counterexample"] = report->counterexample->str();
    }
    out << dump(j);
  } else {
    out << render_basis(basis, cfg.format);
    if (report) out << comment_prefix(cfg.format) << render_report(*report, horizon) << '\n';
  }
  return report && !report->equal ? kVerificationFailed : kOk;
}

inline int run_avoiders(const RunConfig& cfg, std::ostream& out) {
  const Basis basis = load_basis(cfg);
  const std::size_t n = cfg.n.value_or(cfg.len);
  const auto av = avoiders(basis, n, cfg.cap);
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["n"] = n;
    ordered_json levels = ordered_json::array();
    for (const auto& level : av.by_length) {
      ordered_json l = ordered_json::array();
      for (const auto& p : level) l.push_back(p.str());
      levels.push_back(std::move(l));
    }
    j["by_length"] = std::move(levels);
    out << dump(j);
    return kOk;
  }
  write_permutations(out, av.flat());
  return kOk;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto inputs = load_inputs(cfg);
  const Basis basis = load_basis(cfg);
  const std::size_t n = cfg.n.value_or(max_length(inputs));
  const auto report = verify_equality(inputs, basis, n, cfg.cap);
  out << render_report(report, n) << '\n';
  return report.equal ? kOk : kVerificationFailed;
}

inline int run_classgen(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.class_spec) throw std::invalid_argument("classgen needs --class SPEC");
  const auto perms = generate_class(*cfg.class_spec, cfg.len, cfg.cap);
  if (cfg.format == Format::Json) {
    ordered_json j = ordered_json::array();
    for (const auto& p : perms) j.push_back(p.str());
    out << dump(j);
    return kOk;
  }
  write_permutations(out, perms);
  return kOk;
}

}  // namespace detail

/// Runs one command. Output goes to `out`, diagnostics to `err`. Returns
/// 0 on success, 1 when a verification fails, 2 on bad input and 3 when a
/// resource cap is exceeded.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.cap < cfg.n.value_or(0)) throw LimitError("horizon exceeds --cap");
    switch (cfg.command) {
      case Command::Mine: return detail::run_mine(cfg, out);
      case Command::Bisc: return detail::run_bisc(cfg, out);
      case Command::Avoiders: return detail::run_avoiders(cfg, out);
      case Command::Verify: return detail::run_verify(cfg, out);
      case Command::Classgen: return detail::run_classgen(cfg, out);
    }
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace bisc::cli
