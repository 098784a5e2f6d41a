#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "radialgeo/cli.hpp"

using namespace radialgeo;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "radialgeo");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("RADIALGEO_TOL");
    dir_ = std::filesystem::temp_directory_path() /
           ("radialgeo_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::filesystem::path dir_;
};

constexpr const char* kFlatConfig = R"({"profile": {"segments": [], "tail": {"kind": "zero"}}, "n": 2})";
constexpr const char* kAiryConfig = R"({"profile": {"segments": [[0, 2, 1, -1]], "tail": {"kind": "zero"}}, "n": 2, "tol": 1e-12})";

}  // namespace

TEST(Cli, GalleryAnalyzeFlat) {
  const CliResult r = run({"gallery", "analyze", "flat", "-n", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["growth"]["direct"]["value"].get<double>(), 3.14159265359, 1e-10);
  EXPECT_TRUE(j["hypothesis"]["holds"].get<bool>());
}

TEST(Cli, GalleryAnalyzeHyperbolicFails) {
  const CliResult r = run({"gallery", "analyze", "hyperbolic", "-n", "2"});
  EXPECT_EQ(r.code, kExitHypothesis);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["conclusions"].empty());
}

TEST(Cli, GalleryAnalyzeSphericalIsCompact) {
  const CliResult r = run({"gallery", "analyze", "spherical"});
  EXPECT_EQ(r.code, kExitHypothesis);
  EXPECT_NE(r.err.find("compact"), std::string::npos);
}

TEST(Cli, GalleryUnknownName) {
  const CliResult r = run({"gallery", "analyze", "nope"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("nope"), std::string::npos);
}

TEST(Cli, GalleryList) {
  const CliResult r = run({"gallery", "list"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* name : {"flat", "hyperbolic", "abresch_tail", "sign_changing_beta_ln2", "moment_boundary"}) {
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  }
}

TEST(Cli, UnknownFlagPrintsUsage) {
  const CliResult r = run({"gallery", "list", "--bogus"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, NoSubcommand) {
  EXPECT_EQ(run({}).code, kExitInput);
}

TEST(Cli, Help) {
  const CliResult r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

TEST(Cli, MissingConfig) {
  const CliResult r = run({"analyze", "--config", "missing.json"});
  EXPECT_EQ(r.code, kExitInput);
}

TEST_F(CliFiles, AnalyzeWithSamplesToFile) {
  const std::string cfg = write("flat.json", kFlatConfig);
  std::string csv = "t,vol\n";
  for (int i = 1; i <= 6; ++i) {
    const double t = 500.0 * i;
    std::ostringstream row;
    row.precision(17);
    row << t << ',' << 3.141592653589793 * t * t << '\n';
    csv += row.str();
  }
  const std::string samples = write("disk.csv", csv);
  const std::string out = (dir_ / "report.json").string();
  const CliResult r = run({"analyze", "--config", cfg, "--samples", samples, "--out", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  EXPECT_NEAR(j["manifold_growth_limit"]["value"].get<double>(), 3.141592653589793, 1e-6);
  bool ends = false;
  for (const auto& c : j["conclusions"]) ends |= c["id"] == "ends_bound";
  EXPECT_TRUE(ends);
}

TEST_F(CliFiles, AnalyzeBadSamples) {
  const std::string cfg = write("flat.json", kFlatConfig);
  const std::string samples = write("bad.csv", "t,vol\n2,1\n1,2\n");
  const CliResult r = run({"analyze", "--config", cfg, "--samples", samples});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("row 3"), std::string::npos);
}

TEST_F(CliFiles, AnalyzeMalformedConfig) {
  EXPECT_EQ(run({"analyze", "--config", write("bad.json", "{\"profile\": 3}")}).code, kExitInput);
}

TEST_F(CliFiles, TabulateAiry) {
  const std::string cfg = write("airy.json", kAiryConfig);
  const CliResult r = run({"tabulate", "--config", cfg, "--t-max", "5", "--step", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,f,fp,m,mp");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows.front(), "0,0,1,0,1");
  double t, f, fp, m, mp;
  char c;
  std::istringstream last(rows.back());
  last >> t >> c >> f >> c >> fp >> c >> m >> c >> mp;
  EXPECT_EQ(t, 5.0);
  EXPECT_NEAR(f, 6.8498035253320055182, 1e-9);
  EXPECT_NEAR(m, 7.9020777031526067795, 1e-9);
}

TEST_F(CliFiles, TabulateWithVolume) {
  const std::string cfg = write("flat.json", kFlatConfig);
  const CliResult r = run({"tabulate", "--config", cfg, "--t-max", "3", "--step", "1", "--with-volume"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("t,f,fp,m,mp,vol_n\n"), std::string::npos);
  EXPECT_NE(r.out.find("3,3,1,3,1,28.2743338823"), std::string::npos) << r.out;
}

TEST_F(CliFiles, TabulateStopsAtFirstZero) {
  const std::string cfg = write("sphere.json", R"({"profile": {"tail": {"kind": "constant", "kappa": 1}}})");
  const CliResult r = run({"tabulate", "--config", cfg, "--t-max", "5", "--step", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find("\n4,"), std::string::npos);
  EXPECT_NE(r.out.find("\n3,"), std::string::npos);
}

TEST_F(CliFiles, TabulateRejectsBadStep) {
  const std::string cfg = write("flat.json", kFlatConfig);
  EXPECT_EQ(run({"tabulate", "--config", cfg, "--t-max", "3", "--step", "0"}).code, kExitInput);
  EXPECT_EQ(run({"tabulate", "--config", cfg, "--t-max", "3"}).code, kExitInput);
}
