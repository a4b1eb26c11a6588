#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cli.hpp"

using namespace eqdim;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("eqdim_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string graph_file(PolytopeClass pc, const std::string& format = "json") {
    auto path = (dir_ / (std::string(tag_name(pc.tag)) + std::to_string(pc.n) + "." + format)).string();
    auto r = run({"gen", "--class", std::string(tag_name(pc.tag)), "--n", std::to_string(pc.n), "--format", format, "--out", path});
    EXPECT_EQ(r.code, 0) << r.err;
    return path;
  }

  std::string write(const std::string& name, const std::string& text) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenJson) {
  auto r = run({"gen", "--class", "t", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 20u);
  EXPECT_EQ(j["edges"].size(), 45u);
  EXPECT_NE(r.err.find("20 vertices, 45 edges"), std::string::npos);
}

TEST_F(CliTest, GenDimacs) {
  auto r = run({"gen", "--class", "r2", "--n", "6", "--format", "dimacs"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p edge 36 54"), std::string::npos);
}

TEST_F(CliTest, GenErrors) {
  auto r = run({"gen", "--class", "s", "--n", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"gen", "--class", "x", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "6"}).code, 2);
  auto warn = run({"gen", "--class", "t", "--n", "3"});
  EXPECT_EQ(warn.code, 0);
  EXPECT_NE(warn.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"solve", "--in", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"solve", "--in", write("bad.json", "{\"name\": 3"), "--format", "json"}).code, 2);
  EXPECT_EQ(run({"solve", "--in", graph_file({PolytopeTag::T, 5}), "--time-limit", "-1"}).code, 2);
  EXPECT_EQ(run({"solve", "--in", graph_file({PolytopeTag::T, 5}), "--node-limit", "0"}).code, 2);
  auto disconnected = write("disc.json", R"({"name":"x","vertices":["a","b","c","d"],"edges":[["a","b"],["c","d"]]})");
  auto r = run({"solve", "--in", disconnected});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("connected"), std::string::npos);
}

TEST_F(CliTest, SolveTFive) {
  auto in = graph_file({PolytopeTag::T, 5});
  auto cert = (dir_ / "cert.json").string();
  auto r = run({"solve", "--in", in, "--cert", cert});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("eqdim = 10"), std::string::npos);
  std::ifstream cf(cert);
  auto j = nlohmann::json::parse(cf);
  EXPECT_EQ(j["value"], 10);
  auto g = parse_graph(cli::detail::read_input(in));
  EXPECT_TRUE(certificate_from_json(g, j).validate(all_pairs_distances(g)));
}

TEST_F(CliTest, SolveJsonMatchesText) {
  auto in = graph_file({PolytopeTag::S2, 7});
  auto j = nlohmann::json::parse(run({"solve", "--in", in, "--format", "json"}).out);
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_EQ(j["value"], 15);
  auto text = run({"solve", "--in", in}).out;
  EXPECT_NE(text.find("eqdim = 15"), std::string::npos);
  std::string set;
  for (const auto& v : j["set"]) set += (set.empty() ? "" : ",") + v.get<std::string>();
  EXPECT_NE(text.find("set: " + set), std::string::npos);
}

TEST_F(CliTest, SolveCycleFromDimacs) {
  auto in = write("c5.dimacs", to_dimacs(cycle_graph(5)));
  auto r = run({"solve", "--in", in});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eqdim = 3"), std::string::npos);
}

TEST_F(CliTest, SolveBudgetExceeded) {
  auto in = graph_file({PolytopeTag::R2, 9});
  auto r = run({"solve", "--in", in, "--node-limit", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("inconclusive: eqdim in [27, "), std::string::npos) << r.out;
  auto j = nlohmann::json::parse(run({"solve", "--in", in, "--node-limit", "1", "--format", "json"}).out);
  EXPECT_EQ(j["status"], "budget-exceeded");
  EXPECT_EQ(j["lower_bound"], 27);
  EXPECT_FALSE(j.contains("value"));
}

TEST_F(CliTest, SolveBudgetFromEnvironment) {
  auto in = graph_file({PolytopeTag::T, 5});
  ::setenv(cli::kBudgetEnv, "30", 1);
  auto r = run({"solve", "--in", in});
  ::unsetenv(cli::kBudgetEnv);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(cli::budget_from_env(), std::nullopt);
}

TEST_F(CliTest, SolveParallelFlagged) {
  auto in = graph_file({PolytopeTag::S2, 7});
  auto j = nlohmann::json::parse(run({"solve", "--in", in, "--parallel", "--format", "json"}).out);
  EXPECT_EQ(j["value"], 15);
  EXPECT_EQ(j["parallel"], true);
  EXPECT_TRUE(j.contains("note"));
}

TEST_F(CliTest, Verify) {
  auto in = graph_file({PolytopeTag::T, 5});
  EXPECT_EQ(run({"verify", "--in", in, "--set", "a0,a1,a2,a3,a4,b0,b1,b2,b3,b4"}).code, 0);
  EXPECT_EQ(run({"verify", "--in", in, "--set", "a*,b*"}).code, 0);
  auto fail = run({"verify", "--in", in, "--set", "a0"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("not a distance-equalizer set"), std::string::npos);
  auto fj = nlohmann::json::parse(run({"verify", "--in", in, "--set", "a0", "--format", "json"}).out);
  EXPECT_EQ(fj["equalizer"], false);
  EXPECT_EQ(fj["failing_pair"].size(), 2u);
  EXPECT_EQ(run({"verify", "--in", in, "--set", "z9"}).code, 2);
  EXPECT_EQ(run({"verify", "--in", in, "--set", "q*"}).code, 2);
}

TEST_F(CliTest, BlockSugar) {
  auto g = gen_t(5);
  auto s = cli::parse_vertex_set(g, "a*, c3");
  EXPECT_EQ(s.count(), 6u);
  EXPECT_TRUE(s.test(g.id("c3")));
}

TEST_F(CliTest, DistAndWset) {
  auto in = graph_file({PolytopeTag::T, 5});
  auto r = run({"dist", "--in", in, "--u", "d0", "--v", "b2"});
  EXPECT_EQ(r.out, "d(d0, b2) = 4\n");
  auto j = nlohmann::json::parse(run({"dist", "--in", in, "--format", "json"}).out);
  EXPECT_EQ(j["matrix"].size(), 20u);
  EXPECT_EQ(j["diameter"], 4);
  EXPECT_EQ(run({"dist", "--in", in, "--u", "d0"}).code, 2);
  auto w = nlohmann::json::parse(run({"wset", "--in", in, "--u", "b0", "--v", "c0", "--format", "json"}).out);
  EXPECT_EQ(w["forced"], true);
  EXPECT_TRUE(w["w"].empty());
  EXPECT_EQ(run({"wset", "--in", in, "--u", "b0", "--v", "b0"}).code, 2);
}

TEST_F(CliTest, Bounds) {
  auto s2 = nlohmann::json::parse(run({"bounds", "--in", graph_file({PolytopeTag::S2, 6}), "--format", "json"}).out);
  EXPECT_EQ(s2["best_lower"], 12);
  auto star = write("star.json", graph_to_json(star_graph(5)).dump());
  auto text = run({"bounds", "--in", star}).out;
  EXPECT_NE(text.find("exact: 1 (degree characterization"), std::string::npos) << text;
  auto t6 = run({"bounds", "--in", graph_file({PolytopeTag::T, 6})}).out;
  EXPECT_NE(t6.find("upper: 19 (upper bound |V| - max degree)"), std::string::npos) << t6;
}

TEST_F(CliTest, Repro) {
  auto r = run({"repro", "--n-max", "4"});
  EXPECT_EQ(r.code, 2);
  auto t = run({"repro", "--class", "t", "--n-max", "7"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("repaired"), std::string::npos);
  EXPECT_EQ(t.out.find("exact-s"), std::string::npos);
}

TEST_F(CliTest, ReproJsonDeterministic) {
  auto out = (dir_ / "r.json").string();
  auto a = run({"repro", "--n-max", "7", "--format", "json", "--out", out});
  auto b = run({"repro", "--n-max", "7", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["summary"]["theorem_failures"], 0);
  std::ifstream f(out);
  EXPECT_EQ(std::string(std::istreambuf_iterator<char>(f), {}), a.out);
}
