#include "braidrep/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = braidrep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyHomomorphismTypesExitZero) {
  for (const char* type : {"I2(2)", "I2(5)", "A2", "B2"}) {
    const RunResult r = run({"verify", type});
    EXPECT_EQ(r.code, 0) << type << "\n" << r.err;
    EXPECT_NE(r.out.find("verdict: homomorphism"), std::string::npos) << type;
  }
}

TEST(Cli, VerifyD4ReportsCounterexampleAndExitsZero) {
  const RunResult r = run({"verify", "D4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: not a homomorphism"), std::string::npos);
  EXPECT_NE(r.out.find("s2 s3 s2"), std::string::npos);
}

TEST(Cli, VerifyUnsupportedTypeExitsTwo) {
  for (const char* type : {"H4", "E6", "F4", "D5", "I2(1)", "nonsense"}) {
    const RunResult r = run({"verify", type});
    EXPECT_EQ(r.code, 2) << type;
    EXPECT_NE(r.err.find("error:"), std::string::npos) << type;
  }
}

TEST(Cli, VerifyJsonIsValid) {
  const RunResult r = run({"verify", "I2(2)", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["map"]["type"], "I2(2)");
  EXPECT_EQ(j["is_homomorphism"], true);
  EXPECT_EQ(j["diagram"]["seed"], braidrep::kDefaultSeed);
}

TEST(Cli, VerifySeedPrecedence) {
  setenv("BRAIDREP_SEED", "777", 1);
  const RunResult env_run = run({"verify", "I2(2)", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(env_run.out)["diagram"]["seed"], 777u);
  const RunResult flag_run = run({"verify", "I2(2)", "--format", "json", "--seed", "123"});
  EXPECT_EQ(nlohmann::json::parse(flag_run.out)["diagram"]["seed"], 123u);
  unsetenv("BRAIDREP_SEED");
  const RunResult default_run = run({"verify", "I2(2)", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(default_run.out)["diagram"]["seed"], braidrep::kDefaultSeed);
}

TEST(Cli, VerifyBadSeedEnvExitsTwo) {
  setenv("BRAIDREP_SEED", "notanumber", 1);
  const RunResult r = run({"verify", "I2(2)"});
  unsetenv("BRAIDREP_SEED");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, NfPrintsNormalForm) {
  const RunResult delta = run({"nf", "--strands", "3", "--word", "1 2 1"});
  EXPECT_EQ(delta.code, 0);
  EXPECT_EQ(delta.out, "D^1 |\n");
  const RunResult id = run({"nf", "--strands", "3", "--word", "1 -1"});
  EXPECT_EQ(id.out, "D^0 |\n");
}

TEST(Cli, NfAgreesOnEquivalentWords) {
  const RunResult a = run({"nf", "--strands", "4", "--word", "1 3 2 1 3 2"});
  const RunResult b = run({"nf", "--strands", "4", "--word", "2 1 3 2 1 3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, "D^1 |\n");
}

TEST(Cli, NfRejectsBadWords) {
  EXPECT_EQ(run({"nf", "--strands", "3", "--word", "7"}).code, 2);
  EXPECT_EQ(run({"nf", "--strands", "3", "--word", "x"}).code, 2);
  EXPECT_EQ(run({"nf", "--strands", "1", "--word", "1"}).code, 2);
  EXPECT_EQ(run({"nf", "--strands", "3"}).code, 2);  // missing --word
}

TEST(Cli, MapPrintsImage) {
  const RunResult r = run({"map", "I2(2)", "--word", "s1 s2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("nf: D^1 |"), std::string::npos);
  EXPECT_NE(r.out.find("permutation: (1,4)(2,3)"), std::string::npos);
  EXPECT_NE(r.out.find("pure: no"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, MapD4WarnsOnStderr) {
  const RunResult r = run({"map", "D4", "--word", "s2 s3 s2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning:"), std::string::npos);
}

TEST(Cli, MapPureWord) {
  const RunResult r = run({"map", "B3", "--word", "s1 s1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pure: yes"), std::string::npos);
}

TEST(Cli, ScanGridAndKernel) {
  const RunResult grid = run({"scan", "I2(2)", "--bound", "3"});
  EXPECT_EQ(grid.code, 0);
  EXPECT_NE(grid.out.find("injectivity-grid"), std::string::npos);
  EXPECT_NE(grid.out.find("kernel trivial: yes"), std::string::npos);

  const RunResult kernel = run({"scan", "I2(3)", "--bound", "2"});
  EXPECT_EQ(kernel.code, 0);
  EXPECT_NE(kernel.out.find("scan: kernel"), std::string::npos);
}

TEST(Cli, ScanD4Refused) {
  const RunResult r = run({"scan", "D4", "--bound", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("refused"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ScanJson) {
  const RunResult r = run({"scan", "I2(2)", "--bound", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["enumerated"], 9);
  EXPECT_EQ(j["kernel_trivial"], true);
}

TEST(Cli, ScanNegativeBoundExitsTwo) {
  EXPECT_EQ(run({"scan", "I2(2)", "--bound", "-1"}).code, 2);
}

TEST(Cli, RenderAsciiToStdout) {
  const RunResult r = run({"render", "--strands", "3", "--word", "1 -2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\\ / |"), std::string::npos);
}

TEST(Cli, RenderSvgToFile) {
  const std::string path = ::testing::TempDir() + "braidrep_render_test.svg";
  const RunResult r =
      run({"render", "--strands", "4", "--word", "1 2 3", "--format", "svg", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  ASSERT_TRUE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content.rfind("<svg", 0), 0u);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "I2(2)", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"render", "--strands", "3"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"verify", "--help"}).code, 0);
}
