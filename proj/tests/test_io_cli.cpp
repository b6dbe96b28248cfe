#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bisc/cli.hpp"
#include "oracles.hpp"

namespace bisc {
namespace {

Basis sample_basis() {
  Basis b = make_basis(parse_pattern_list("2341, (3241, {(1,4)}), (12, {(0,0),(2,2)}), eps"));
  b.m = 4;
  b.N = 5;
  b.pruned = true;
  return b;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("bisc_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(PermutationFiles, Reads) {
  std::istringstream in("1\n21\n\n# comment\n321\n2341\n4123\n4321  # trailing\neps\n");
  const auto perms = read_permutations(in);
  ASSERT_EQ(perms.size(), 7u);
  EXPECT_EQ(perms[0], Permutation{1});
  EXPECT_EQ(perms[5], (Permutation{4, 3, 2, 1}));
  EXPECT_EQ(perms[6], Permutation{});

  std::istringstream empty("");
  EXPECT_TRUE(read_permutations(empty).empty());
  std::istringstream one("35241\n");
  EXPECT_EQ(read_permutations(one), (std::vector<Permutation>{Permutation{3, 5, 2, 4, 1}}));
}

TEST(PermutationFiles, ErrorsCarryLineNumbers) {
  std::istringstream bad("12\n21\n1x2\n");
  try {
    read_permutations(bad);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream nonbij("12\n113\n");
  EXPECT_THROW(read_permutations(nonbij), ParseError);
  EXPECT_THROW(read_permutation_file("/nonexistent/bisc/file"), ParseError);
}

TEST(Json, BasisRoundTrip) {
  const auto b = sample_basis();
  const auto text = dump(to_json(b));
  EXPECT_EQ(basis_from_json(ordered_json::parse(text)), b);
  EXPECT_EQ(text, dump(to_json(basis_from_json(ordered_json::parse(text)))));
  EXPECT_EQ(text.rfind("{\"m\":4,\"N\":5,\"pruned\":true,", 0), 0u);
}

TEST(Json, TablesRoundTrip) {
  const auto a = gen_west2(5);
  const auto mined = mine(a, 3);
  EXPECT_EQ(mined_table_from_json(ordered_json::parse(dump(to_json(mined)))).entries, mined.entries);
  const auto forb = gen(mined);
  EXPECT_EQ(forbidden_table_from_json(ordered_json::parse(dump(to_json(forb)))).entries, forb.entries);
}

TEST(Json, RejectsOutOfBoundsCell) {
  const auto j = ordered_json::parse(R"({"m":2,"N":2,"pruned":false,"patterns":[{"pattern":"1","shading":[[2,0]]}]})");
  EXPECT_THROW(basis_from_json(j), ParseError);
}

TEST(Text, RoundTrip) {
  const auto b = sample_basis();
  std::istringstream in("# header\n" + render_text(b));
  EXPECT_EQ(parse_text_patterns(in), b.patterns);
}

TEST(Ascii, Rendering) {
  EXPECT_EQ(render_ascii(MeshPattern::parse("(12, {(0,0),(2,2)})")),
            ".|.|#\n"
            "-+-*-\n"
            ".|.|.\n"
            "-*-+-\n"
            "#|.|.\n");
  EXPECT_EQ(render_ascii(MeshPattern(Permutation{}, Shading::full(0))), "#\n");
}

TEST(Ascii, RoundTrip) {
  std::mt19937_64 rng(73);
  std::vector<MeshPattern> pats;
  for (int i = 0; i < 30; ++i) pats.push_back(oracle::random_mesh_pattern(rng, 0, 6, 0.4));
  const auto b = make_basis(pats);
  std::istringstream in("% comment\n" + render_ascii(b));
  EXPECT_EQ(parse_ascii_patterns(in), b.patterns);
}

TEST(Ascii, RejectsMalformedGrids) {
  EXPECT_THROW(parse_ascii_pattern({"#|.", "-*-", ".|"}), ParseError);
  EXPECT_THROW(parse_ascii_pattern({".|.|.", "-*-*-", ".|.|.", "-+-+-", ".|.|."}), ParseError);
  EXPECT_THROW(parse_ascii_pattern({".|.", "-x-", ".|."}), ParseError);
  EXPECT_THROW(parse_ascii_pattern({"..", ".."}), ParseError);
}

TEST(Tikz, Rendering) {
  const auto t = render_tikz(MeshPattern::parse("(12, {(0,0)})"));
  EXPECT_NE(t.find("\\fill[gray!40] (0,0) rectangle (1,1);"), std::string::npos);
  EXPECT_NE(t.find("\\fill (2,2) circle"), std::string::npos);
  EXPECT_NE(render_tikz(sample_basis()).find("% (3241, {(1,4)})"), std::string::npos);
}

struct Result {
  int code;
  std::string out, err;
};

Result run_cfg(const cli::RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig make(cli::Command c) {
  cli::RunConfig cfg;
  cfg.command = c;
  return cfg;
}

TEST(Cli, WestTwoPruned) {
  auto cfg = make(cli::Command::Bisc);
  cfg.class_spec = "west2";
  cfg.len = 5;
  cfg.m = 4;
  cfg.prune = true;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2341\n(3241, {(1,4)})\n");
}

TEST(Cli, AvoidersOf231) {
  auto cfg = make(cli::Command::Avoiders);
  cfg.patterns = "231";
  cfg.n = 3;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "eps\n1\n12\n21\n123\n132\n213\n312\n321\n");
}

TEST(Cli, DihedralSixteen) {
  auto cfg = make(cli::Command::Bisc);
  cfg.class_spec = "dihedral";
  cfg.len = 4;
  cfg.m = 4;
  cfg.prune = true;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  const auto pats = parse_text_patterns(in);
  EXPECT_EQ(pats.size(), 16u);
  for (const auto& mp : pats) EXPECT_TRUE(mp.is_classical());
}

TEST(Cli, VerificationFailureExitsOne) {
  auto cfg = make(cli::Command::Verify);
  cfg.class_spec = "west2";
  cfg.len = 5;
  cfg.patterns = "2341, 3241";
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "verify n=5: FAILED, first difference 35241\n");

  cfg.patterns = "2341, (3241, {(1,4)})";
  EXPECT_EQ(run_cfg(cfg).code, 0);
}

TEST(Cli, BiscReportsHorizon) {
  auto cfg = make(cli::Command::Bisc);
  cfg.class_spec = "west2";
  cfg.len = 5;
  cfg.m = 3;
  cfg.n = 5;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("# verify n=5: FAILED"), std::string::npos);

  cfg.format = cli::Format::Json;
  const auto j = ordered_json::parse(run_cfg(cfg).out);
  EXPECT_FALSE(j.at("verify").at("equal").get<bool>());
}

TEST(Cli, InputErrorsExitTwo) {
  auto cfg = make(cli::Command::Bisc);
  EXPECT_EQ(run_cfg(cfg).code, 2);  // no input
  cfg.input = temp_file("bad.txt", "12\n1a\n");
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  cfg.input.reset();
  cfg.class_spec = "unknown_class";
  EXPECT_EQ(run_cfg(cfg).code, 2);
  auto av = make(cli::Command::Avoiders);
  av.patterns = "(12, {(5,5)})";
  EXPECT_EQ(run_cfg(av).code, 2);
}

TEST(Cli, CapExitsThree) {
  auto cfg = make(cli::Command::Avoiders);
  cfg.patterns = "231";
  cfg.n = 12;
  EXPECT_EQ(run_cfg(cfg).code, 3);
  auto gen = make(cli::Command::Classgen);
  gen.class_spec = "west2";
  gen.len = 8;
  gen.cap = 6;
  const auto r = run_cfg(gen);
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, InputFileAndBasisFile) {
  auto cfg = make(cli::Command::Verify);
  cfg.input = temp_file("difficult.txt", "eps\n1\n21\n321\n2341\n4123\n4321\n");
  cfg.basis_file = temp_file("basis.txt", "(12, {(0,0), (1,1), (2,2)})\n(12, {(0,2), (1,1), (2,0)})\n");
  EXPECT_EQ(run_cfg(cfg).out, "verify n=4: ok\n");

  auto b = make(cli::Command::Bisc);
  b.input = cfg.input;
  b.m = 2;
  b.format = cli::Format::Json;
  cfg.basis_file = temp_file("basis.json", run_cfg(b).out);
  EXPECT_EQ(run_cfg(cfg).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto f : {cli::Format::Text, cli::Format::Json, cli::Format::Ascii, cli::Format::Tikz}) {
    auto cfg = make(cli::Command::Bisc);
    cfg.class_spec = "forestlike";
    cfg.len = 5;
    cfg.m = 4;
    cfg.format = f;
    const auto first = run_cfg(cfg);
    setenv("BISC_THREADS", "2", 1);
    const auto second = run_cfg(cfg);
    unsetenv("BISC_THREADS");
    EXPECT_EQ(first.out, second.out);
  }
}

TEST(Cli, MineOutput) {
  auto cfg = make(cli::Command::Mine);
  cfg.class_spec = "avoid:231";
  cfg.len = 4;
  cfg.m = 3;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# never occurring: 231"), std::string::npos);
  cfg.format = cli::Format::Json;
  const auto t = mined_table_from_json(ordered_json::parse(run_cfg(cfg).out));
  EXPECT_EQ(t.entries, mine(gen_stack_sortable(4), 3).entries);
}

TEST(Cli, ParseHelpers) {
  EXPECT_EQ(cli::parse_command("classgen"), cli::Command::Classgen);
  EXPECT_EQ(cli::parse_format("tikz"), cli::Format::Tikz);
  EXPECT_THROW(cli::parse_format("yaml"), std::invalid_argument);
}

}  // namespace
}  // namespace bisc
