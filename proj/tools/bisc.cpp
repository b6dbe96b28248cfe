// bisc: learn mesh-pattern bases from sets of permutations.

#include <iostream>

#include <CLI11.hpp>

#include "bisc/cli.hpp"

namespace {

void add_input_options(CLI::App* sub, bisc::cli::RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "File with one permutation per line");
  sub->add_option("--class", cfg.class_spec,
                  "Generated class: stack_sortable, west2, quicksort1, dihedral, alternating, "
                  "smooth, forestlike, baxter, simsun, rsk_avoid:<shape>, "
                  "restricted_stack:<sigma>, avoid:<patterns>");
  sub->add_option("--len", cfg.len, "Maximum length of generated class members");
}

void add_basis_options(CLI::App* sub, bisc::cli::RunConfig& cfg) {
  sub->add_option("--patterns", cfg.patterns, "Pattern list, e.g. \"1324, (2143, {(2,2)})\"");
  sub->add_option("--basis", cfg.basis_file, "Basis file (text, one pattern per line, or JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  bisc::cli::RunConfig cfg;
  std::string format = "text";

  CLI::App app{"Learn mesh-pattern descriptions of permutation sets"};
  app.require_subcommand(1);
  app.add_option("--format", format, "Output format: text, json, ascii or tikz")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Largest permutation length to enumerate")->capture_default_str();

  auto* mine = app.add_subcommand("mine", "Record the maximal allowed shadings of every pattern");
  auto* bisc = app.add_subcommand("bisc", "Mine and generate the forbidden patterns");
  auto* avoiders = app.add_subcommand("avoiders", "List the permutations avoiding a basis");
  auto* verify = app.add_subcommand("verify", "Compare an input set with the avoiders of a basis");
  auto* classgen = app.add_subcommand("classgen", "Print the members of a generated class");

  for (auto* sub : {mine, bisc, avoiders, verify, classgen}) {
    sub->add_option("--format", format, "Output format: text, json, ascii or tikz");
    sub->add_option("--cap", cfg.cap, "Largest permutation length to enumerate");
    sub->add_option("-n", cfg.n, "Verification and pruning horizon");
  }
  for (auto* sub : {mine, bisc, verify, classgen}) add_input_options(sub, cfg);
  for (auto* sub : {mine, bisc}) sub->add_option("-m", cfg.m, "Longest pattern to search for");
  for (auto* sub : {avoiders, verify}) add_basis_options(sub, cfg);
  avoiders->add_option("--len", cfg.len, "Longest avoider to list when -n is absent");
  bisc->add_flag("--prune", cfg.prune, "Drop patterns not needed up to the horizon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bisc::cli::kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    cfg.command = bisc::cli::parse_command(name);
    cfg.format = bisc::cli::parse_format(format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bisc::cli::kInputError;
  }
  return bisc::cli::run(cfg, std::cout, std::cerr);
}
