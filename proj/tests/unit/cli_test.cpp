#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "mgcolor/graph_io.hpp"
#include "mgcolor/oracle.hpp"

namespace mgcolor {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mgcolor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string Slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  static void Spit(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
  }

  struct Outcome {
    int code;
    std::string out;
    std::string err;
  };

  static Outcome Run(const cli::RunConfig& c) {
    std::ostringstream out, err;
    const int code = cli::run(c, out, err);
    return {code, out.str(), err.str()};
  }

  std::string Write(const std::string& name, const Multigraph& g) const {
    Spit(Path(name), graph_to_string(g));
    return Path(name);
  }

  fs::path dir_;
};

Multigraph K(int n) {
  Multigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_mult(u, v, 1);
  return g;
}

TEST_F(CliTest, ColorOnQStarTwoGivesSix) {
  cli::RunConfig gen;
  gen.subcommand = "generate";
  gen.named = "q_star(2)";
  gen.output = Path("q2.txt");
  ASSERT_EQ(Run(gen).code, 0);

  cli::RunConfig c;
  c.subcommand = "color";
  c.input = gen.output;
  const Outcome o = Run(c);
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream in(o.out);
  const EdgeColoring col = read_coloring(in);
  EXPECT_EQ(col.colors, 6);
  EXPECT_FALSE(verify_coloring(read_graph_file(gen.output), col).has_value());
}

TEST_F(CliTest, AnalyzeCompleteFiveIsOverfull) {
  cli::RunConfig c;
  c.subcommand = "analyze";
  c.input = Write("k5.txt", K(5));
  const Outcome o = Run(c);
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "omega 5/1\nchi_f 5/1\nclass overfull\nwitness 0 1 2 3 4\n");
}

TEST_F(CliTest, VerifyMismatchExitsTwo) {
  const std::string graph = Write("k4.txt", K(4));
  Spit(Path("bad.txt"), "colors 3\n0 1 0 1\n0 2 0 1\n0 3 0 2\n1 2 0 3\n1 3 0 3\n2 3 0 2\n");
  cli::RunConfig c;
  c.subcommand = "verify";
  c.input = graph;
  c.coloring = Path("bad.txt");
  const Outcome o = Run(c);
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(o.out.rfind("violation ", 0), 0u) << o.out;

  Spit(Path("good.txt"), "colors 3\n0 1 0 1\n2 3 0 1\n0 2 0 2\n1 3 0 2\n0 3 0 3\n1 2 0 3\n");
  c.coloring = Path("good.txt");
  EXPECT_EQ(Run(c).code, 0);
}

TEST_F(CliTest, ExitCodes) {
  cli::RunConfig c;
  c.subcommand = "analyze";
  c.input = Path("missing.txt");
  EXPECT_EQ(Run(c).code, 4);

  Spit(Path("garbage.txt"), "n 3\ne 0 0 1\n");
  c.input = Path("garbage.txt");
  EXPECT_EQ(Run(c).code, 4);

  c.input = Write("k5.txt", K(5));
  c.epsilon = Rational(1);
  Outcome o = Run(c);
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("0 < epsilon < 1"), std::string::npos) << o.err;

  c.epsilon = Rational(1, 2);
  c.oracle_cap = 0;
  EXPECT_EQ(Run(c).code, 2);

  c.oracle_cap = 40;
  c.subcommand = "factorize";
  o = Run(c);
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("odd-order"), std::string::npos) << o.err;

  c.subcommand = "bogus";
  EXPECT_EQ(Run(c).code, 2);
}

TEST_F(CliTest, OracleAndFactorize) {
  cli::RunConfig c;
  c.subcommand = "oracle";
  c.input = Write("p.txt", read_graph_file(Write("k4.txt", K(4))));
  EXPECT_EQ(Run(c).out, "chi 3\n");

  cli::RunConfig gen;
  gen.subcommand = "generate";
  gen.named = "folded_complete(8,2)";
  gen.output = Path("k8.txt");
  ASSERT_EQ(Run(gen).code, 0);

  for (const char* cmd : {"factorize", "decompose"}) {
    cli::RunConfig f;
    f.subcommand = cmd;
    f.input = gen.output;
    f.desk_scale = true;
    const Outcome o = Run(f);
    ASSERT_EQ(o.code, 0) << cmd << ": " << o.err;
    std::istringstream in(o.out);
    const EdgeColoring col = read_coloring(in);
    EXPECT_EQ(col.edges.size(), 56u) << cmd;
    if (std::string(cmd) == "factorize") {
      EXPECT_EQ(col.colors, 14);
      EXPECT_FALSE(verify_coloring(read_graph_file(gen.output), col).has_value());
    }
  }
}

struct DeskSpec {
  const char* regime;
  int n, r, target;
  std::uint64_t seed;
};

TEST_F(CliTest, GenerateColorVerifyRoundTrip) {
  const DeskSpec suite[] = {
      {"regular", 8, 2, 14, 1},          {"regular", 10, 3, 24, 7},
      {"regular", 12, 2, 16, 3},         {"min-degree", 8, 2, 10, 4},
      {"min-degree", 10, 3, 20, 5},      {"min-degree", 12, 2, 18, 6},
      {"deficient-dense", 18, 2, 27, 2}, {"deficient-dense", 18, 3, 41, 8},
      {"deficient-dense", 20, 3, 45, 3},
  };
  for (const DeskSpec& s : suite) {
    SCOPED_TRACE(std::string(s.regime) + " n=" + std::to_string(s.n) + " seed=" + std::to_string(s.seed));
    cli::RunConfig gen;
    gen.subcommand = "generate";
    gen.regime = s.regime;
    gen.n = s.n;
    gen.r = s.r;
    gen.target = s.target;
    gen.seed = s.seed;
    gen.output = Path("g.txt");
    const Outcome g = Run(gen);
    ASSERT_EQ(g.code, 0) << g.err;

    cli::RunConfig color;
    color.subcommand = "color";
    color.input = gen.output;
    color.desk_scale = true;
    color.seed = s.seed;
    color.output = Path("c.txt");
    const Outcome c = Run(color);
    ASSERT_EQ(c.code, 0) << c.err;

    cli::RunConfig verify;
    verify.subcommand = "verify";
    verify.input = gen.output;
    verify.coloring = color.output;
    const Outcome v = Run(verify);
    EXPECT_EQ(v.code, 0) << v.out;
  }
}

TEST_F(CliTest, IdenticalInvocationsAreByteIdentical) {
  auto once = [&](const std::string& tag) {
    cli::RunConfig gen;
    gen.subcommand = "generate";
    gen.regime = "deficient-dense";
    gen.n = 18;
    gen.r = 3;
    gen.target = 41;
    gen.seed = 8;
    gen.output = Path("g" + tag);
    EXPECT_EQ(Run(gen).code, 0);
    cli::RunConfig color;
    color.subcommand = "color";
    color.input = gen.output;
    color.desk_scale = true;
    color.seed = 8;
    color.output = Path("c" + tag);
    color.trace = Path("t" + tag);
    EXPECT_EQ(Run(color).code, 0);
    return Slurp(gen.output) + "\n--\n" + Slurp(color.output) + "\n--\n" + Slurp(color.trace);
  };
  const std::string a = once("1");
  const std::string b = once("2");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("stage "), std::string::npos);
}

}  // namespace
}  // namespace mgcolor
