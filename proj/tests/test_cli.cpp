#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "monoball/bounds.hpp"
#include "monoball/cli.hpp"
#include "monoball/fourier.hpp"

using namespace monoball;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "monoball");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("monoball_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(ParseGrid, Values) {
  EXPECT_EQ(parse_r_grid("0:0:1"), std::vector<double>{0.0});
  const auto g = parse_r_grid("0.05:0.45:0.05");
  ASSERT_EQ(g.size(), 9u);
  EXPECT_DOUBLE_EQ(g.front(), 0.05);
  EXPECT_DOUBLE_EQ(g[2], 0.15);
  EXPECT_DOUBLE_EQ(g.back(), 0.45);
  for (const char* bad : {"", "0.1", "0.1:0.2", "0.1:0.2:", "a:0.2:0.1", "0.1:0.2:0", "0.3:0.2:0.1", "0.1:0.5:0.1",
                          "-0.1:0.2:0.1", "0.1:0.2:0.1:0.3"})
    EXPECT_THROW(parse_r_grid(bad), ConfigError) << bad;
}

TEST(ParseQuadrature, Values) {
  EXPECT_EQ(parse_quadrature("8,16"), (std::pair<int, int>{8, 16}));
  for (const char* bad : {"8", "8,", ",16", "0,4", "a,b", "8,16,2"}) EXPECT_THROW(parse_quadrature(bad), ConfigError);
}

TEST(Validate, Limits) {
  RunConfig c;
  EXPECT_NO_THROW(validate(c));
  c.max_degree = -1;
  EXPECT_THROW(validate(c), ConfigError);
  c.max_degree = 17;
  EXPECT_THROW(validate(c), ConfigError);
  c.max_degree = 4;
  c.command = Command::Bound;
  c.trials = 0;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Cli, VersionAndHelp) {
  const auto v = run_cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(kVersion), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({}).code, exit_code::kConfigError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, exit_code::kConfigError);
}

TEST(Cli, BasisDegreeZero) {
  const auto r = run_cli({"basis", "--max-degree", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["tool"], "monoball");
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["config"]["command"], "basis");
  ASSERT_EQ(j["elements"].size(), 3u);
  EXPECT_EQ(j["elements"][0]["kind"], "X0");
  EXPECT_EQ(j["elements"][1]["m"], 1);
  EXPECT_EQ(j["elements"][2]["kind"], "Y");
}

TEST(Cli, BasisCsv) {
  const auto r = run_cli({"basis", "--max-degree", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n,m,kind,", 0), 0u);
  EXPECT_NE(r.out.find("\n1,2,X,"), std::string::npos);
}

TEST(Cli, NormsMatch) {
  const auto r = run_cli({"norms", "--max-degree", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["all_match"].get<bool>());
  std::size_t expected = 0;
  for (int n = 0; n <= 5; ++n) expected += static_cast<std::size_t>(2 * n + 3);
  EXPECT_EQ(j["rows"].size(), expected);
}

TEST(Cli, VerifyPasses) {
  const auto r = run_cli({"verify", "--max-degree", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GE(j["checks"].size(), 8u);
  EXPECT_NE(r.err.find("all checks passed"), std::string::npos);
}

TEST(Cli, DecomposeRoundTrip) {
  const auto basis = normalize_basis(3);
  UniformSource rng(5);
  RandomMonogenicOptions opts;
  opts.max_degree = 3;
  const auto coeffs = random_coefficients(rng, opts);
  const auto f = synthesize(coeffs, basis);
  const QuadratureRule rule(5, 10);
  const auto [re_f, re_fe1] = real_part_samples(f, rule);

  const auto in = temp_file("samples.json");
  {
    json j{{"rule", {{"n_theta", 5}, {"n_phi", 10}}},
           {"re_f", re_f.values},
           {"re_fe1", re_fe1.values},
           {"f0_e2", coeffs.f0.x2}};
    std::ofstream(in) << j.dump();
  }
  const auto r = run_cli({"decompose", "--max-degree", "3", "--input", in.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["f0"][0].get<double>(), coeffs.f0.x0, 1e-12);
  EXPECT_NEAR(j["f0"][1].get<double>(), coeffs.f0.x1, 1e-12);
  EXPECT_DOUBLE_EQ(j["f0"][2].get<double>(), coeffs.f0.x2);
  ASSERT_EQ(j["coeffs"].size(), 5u + 7u + 9u);
  for (const auto& item : j["coeffs"]) {
    const BasisIndex idx{item["n"].get<int>(), monogenic_kind_from_string(item["kind"].get<std::string>()),
                         item["m"].get<int>()};
    EXPECT_NEAR(item["value"].get<double>(), coeffs.at(idx), 1e-9);
  }

  // a rule too coarse for the degree is a configuration error
  EXPECT_EQ(run_cli({"decompose", "--max-degree", "6", "--input", in.string()}).code, exit_code::kConfigError);
  fs::remove(in);
}

TEST(Cli, DecomposeInputErrors) {
  EXPECT_EQ(run_cli({"decompose", "--input", "/nonexistent/samples.json"}).code, exit_code::kIoError);
  const auto bad = temp_file("bad.json");
  std::ofstream(bad) << "{not json";
  EXPECT_EQ(run_cli({"decompose", "--input", bad.string()}).code, exit_code::kIoError);
  std::ofstream(bad) << R"({"rule": {"n_theta": 2, "n_phi": 2}, "re_f": [1, 2], "re_fe1": [1, 2, 3, 4]})";
  EXPECT_EQ(run_cli({"decompose", "--max-degree", "1", "--input", bad.string()}).code, exit_code::kConfigError);
  std::ofstream(bad) << R"({"re_f": [], "re_fe1": []})";
  EXPECT_EQ(run_cli({"decompose", "--max-degree", "1", "--input", bad.string()}).code, exit_code::kConfigError);
  fs::remove(bad);
}

TEST(Cli, BoundAtZeroRadius) {
  const auto r = run_cli({"bound", "--max-degree", "3", "--trials", "3", "--r-grid", "0:0:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 3u);
  for (const auto& rep : j["reports"]) {
    EXPECT_DOUBLE_EQ(rep["rhs_series"].get<double>(), rep["f0_abs"].get<double>());
    EXPECT_DOUBLE_EQ(rep["max_f"].get<double>(), rep["f0_abs"].get<double>());
  }
  EXPECT_TRUE(j["summary"]["passed"].get<bool>());
}

TEST(Cli, BoundSweep) {
  const auto r = run_cli({"bound", "--max-degree", "4", "--trials", "4", "--r-grid", "0.1:0.4:0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["summary"]["cases"], 16);
  EXPECT_EQ(j["summary"]["series_failures"], 0);
  EXPECT_EQ(j["r_values"].size(), 4u);
  EXPECT_EQ(j["a1_ratio"].size(), 4u);
  for (const auto& q : j["a1_ratio"]) EXPECT_NEAR(q["closed_over_series_part1"].get<double>(), 2.0, 1e-10);
}

TEST(Cli, BoundIsDeterministic) {
  const std::vector<std::string> args{"bound", "--max-degree", "3", "--trials", "3", "--r-grid", "0.1:0.3:0.1",
                                      "--seed", "9"};
  const auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  auto other = args;
  other.back() = "10";
  EXPECT_NE(run_cli(other).out, a.out);
  auto csv = args;
  csv.insert(csv.end(), {"--format", "csv"});
  const auto c = run_cli(csv);
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("trial,r,max_f,", 0), 0u);
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 1 + 9);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run_cli({"bound", "--r-grid", "0.1:0.6:0.1"}).code, exit_code::kConfigError);
  EXPECT_EQ(run_cli({"bound", "--quadrature", "1,1", "--max-degree", "3"}).code, exit_code::kConfigError);
  EXPECT_EQ(run_cli({"basis", "--max-degree", "40"}).code, exit_code::kConfigError);
  EXPECT_EQ(run_cli({"basis", "--format", "xml"}).code, exit_code::kConfigError);
  EXPECT_EQ(run_cli({"verify", "--max-degree", "abc"}).code, exit_code::kConfigError);
}

TEST(Cli, OutputFile) {
  const auto path = temp_file("basis.json");
  const auto r = run_cli({"basis", "--max-degree", "1", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["elements"].size(), 8u);
  fs::remove(path);
  EXPECT_EQ(run_cli({"basis", "--out", "/nonexistent/dir/out.json"}).code, exit_code::kIoError);
}

TEST(Cli, Executable) {
  const std::string cmd = std::string(MONOBALL_CLI_PATH) + " norms --max-degree 2 > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  const std::string bad = std::string(MONOBALL_CLI_PATH) + " bound --r-grid 0.1:0.6:0.1 2> /dev/null";
  const int status = std::system(bad.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), exit_code::kConfigError);
}
