#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "rauzy/errors.hpp"
#include "rauzy/report.hpp"
#include "rauzy/verify.hpp"

namespace rauzy {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(RAUZY_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Report, MergeAndOk) {
  Report a, b;
  a.name = "a";
  b.name = "b";
  a.add("x", CheckKind::Exact, true);
  b.add("y", CheckKind::Info, false);
  b.add("z", CheckKind::MonteCarlo, true);
  a.merge(b);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.assertions.size(), 3u);
  EXPECT_EQ(a.assertions[1].name, "b/y");
  a.add("w", CheckKind::Exact, false);
  EXPECT_FALSE(a.ok());
  ASSERT_EQ(a.failures().size(), 1u);
  const auto j = to_json(a);
  EXPECT_EQ(j["assertions"][0]["name"], "b/y");
  EXPECT_EQ(j["assertions"][0]["kind"], "info");
}

TEST(Verify, SuiteNames) {
  EXPECT_TRUE(is_suite("all"));
  EXPECT_TRUE(is_suite("rauzy-combinatorics"));
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_THROW(run_suite("nope", {}), DomainError);
}

TEST(Verify, FastSuitesPass) {
  VerifyConfig cfg;
  cfg.samples = 2000;
  cfg.depth = 6;
  for (const char* s : {"rauzy-combinatorics", "lemmas", "euclid-cf"}) {
    const Report r = run_suite(s, cfg);
    EXPECT_TRUE(r.ok()) << s;
    EXPECT_FALSE(r.assertions.empty());
  }
}

TEST(Cli, RauzyClassJson) {
  const CliRun r = cli("rauzy-class --perm 2,3,1 --seed 1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["seed"], 1);
}

TEST(Cli, GraphExportIsDot) {
  const CliRun r = cli("graph-export --perm 2,1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
}

TEST(Cli, ExpandAndOrbit) {
  const CliRun e = cli("expand --start 5,3");
  ASSERT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("B1"), std::string::npos);
  const CliRun o = cli("orbit --algo rauzy --start 1,2,4 --perm 2,3,1 --depth 2 --format csv");
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "step,vector,tag");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("rauzy-class --perm 1,2,3").code, 2);
  EXPECT_EQ(cli("orbit --algo nope --start 1,2").code, 2);
  EXPECT_EQ(cli("verify nope").code, 2);
  EXPECT_EQ(cli("mcf --algo brun --n 3 --samples 500").code, 0);
  EXPECT_EQ(cli("mcf --algo selmer --n 3 --samples 500").code, 1);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "rauzy_cli_out.json";
  ASSERT_EQ(cli("cone-partition --N 5 --depth 6 --out " + path).code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_TRUE(j.contains("config"));
}

}  // namespace
}  // namespace rauzy
