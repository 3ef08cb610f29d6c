#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" KRL_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string(KRL_DATA_DIR) + "/" + rel; }

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("krl_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, TricomiVerifyPasses) {
  auto r = run("tricomi-verify");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_GE(j["checks"].size(), 5u);
}

TEST(Cli, ZeroDiffusionIsInvalidConfiguration) { EXPECT_EQ(run("tricomi-verify --A 0").status, 2); }

TEST(Cli, CsvTableWritten) {
  const auto p = tmp("t.csv");
  ASSERT_EQ(run("tricomi-verify --csv " + p.string()).status, 0);
  std::ifstream is(p);
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header, "x,v,T,residual,cusp_ratio");
  std::filesystem::remove(p);
}

TEST(Cli, CubicRightHandSideNeedsTricomi) {
  auto r = run("liouville-classify --rhs " + data("rhs/v3.json") + " --A 1");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["case"], "tricomi");
  ASSERT_EQ(j["tricomi_terms"].size(), 1u);
  EXPECT_NEAR(j["tricomi_terms"][0]["m"].get<double>(), -0.05, 1e-15);
}

TEST(Cli, ExceptionalCubicIsPolynomial) {
  auto r = run("liouville-classify --rhs " + data("rhs/v3_minus_2x.json") + " --A 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["case"], "polynomial");
  EXPECT_EQ(run("liouville-classify --rhs '{\"n\":1,\"terms\":[]}' --A -1").status, 2);
}

TEST(Cli, SolverConvergenceTable) {
  auto r = run("solve-kfp --source tricomi --bc specular --nx 64 --levels 2");
  ASSERT_EQ(r.status, 0);
  auto t = json::parse(r.out)["convergence"];
  ASSERT_EQ(t.size(), 2u);
  EXPECT_LT(t[1]["error"].get<double>(), t[0]["error"].get<double>());
  EXPECT_GT(t[1]["order"].get<double>(), 1.0);
}

TEST(Cli, SolverFieldFeedsProbe) {
  const auto p = tmp("field.csv");
  ASSERT_EQ(run("solve-kfp --source tricomi --nx 32 --levels 1 --field-out " + p.string()).status, 0);
  auto r = run("probe-exponent --field " + p.string() + " --space p5 --radii 0.5,0.25,0.125,0.0625");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["slope"].is_number());
  std::filesystem::remove(p);
}

TEST(Cli, ProbeSlopeFiveWithPlateau) {
  auto r = run("probe-exponent --field builtin:tricomi --space p5");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_NEAR(j["slope"].get<double>(), 5.0, 0.1);
  EXPECT_TRUE(j["plateau"].get<bool>());
}

TEST(Cli, CounterexampleFlatAndCurved) {
  auto flat = json::parse(run("counterexample-check --gamma builtin:flat").out);
  EXPECT_EQ(flat["expansion"], "expandable");
  auto curved = run("counterexample-check --gamma builtin:parabola --f-hessian '[[2,0],[0,-2]]'");
  ASSERT_EQ(curved.status, 0);
  EXPECT_EQ(json::parse(curved.out)["expansion"], "obstructed");
  EXPECT_EQ(run("counterexample-check --f-hessian '[[1,2],[0,1]]'").status, 2);
}

TEST(Cli, ReportsAreByteIdentical) {
  for (const std::string args : {"tricomi-verify --seed 17", "solve-kfp --nx 32 --levels 2", "suite --only 1,4 --seed 3"})
    EXPECT_EQ(run(args).out, run(args).out) << args;
}

TEST(Cli, ConfigFileOverridesFlags) {
  const auto p = tmp("cfg.txt");
  std::ofstream(p) << "# comment\nnx = 32\nlevels = 1\nbc = \"inflow\"\n";
  auto r = run("solve-kfp --nx 128 --bc specular --config " + p.string());
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["bc"], "inflow");
  EXPECT_EQ(j["convergence"][0]["nx"], 32);
  std::ofstream(p) << "unknown_key = 1\n";
  EXPECT_EQ(run("solve-kfp --config " + p.string()).status, 2);
  std::filesystem::remove(p);
}

TEST(Cli, SeedFromEnvironment) {
  EXPECT_EQ(json::parse(run("tricomi-verify", "KRL_SEED=42").out)["seed"], 42);
  EXPECT_EQ(json::parse(run("tricomi-verify --seed 7", "KRL_SEED=42").out)["seed"], 7);
  EXPECT_EQ(run("tricomi-verify", "KRL_SEED=x").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("solve-kfp --nx").status, 2);
  EXPECT_EQ(run("solve-kfp --source file").status, 2);
  EXPECT_EQ(run("suite --only 12").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}
