#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(REGDEC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("bogus").status, 1);
  EXPECT_EQ(run("counterexample-zn --p 5").status, 1);
  EXPECT_EQ(run("counterexample-zn --p 5 --t 5").status, 1);
  EXPECT_EQ(run("positive-example --p 3 --q 4 --q1 11").status, 1);
  EXPECT_EQ(run("scan --max-order 100000 --p 3").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, PositiveExampleJson) {
  const auto r = run("--json positive-example --p 3 --q 5 --q1 11");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["scenario"], "positive-example");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["minimal"], true);
  EXPECT_EQ(j["det_is_zero"], false);
  EXPECT_EQ(j.begin().key(), "scenario");
}

TEST(Cli, FailedClaimsExitWithTwo) {
  const auto zn = run("--json counterexample-zn --p 5 --t 3");
  EXPECT_EQ(zn.status, 2);
  EXPECT_EQ(nlohmann::json::parse(zn.out)["status"], "assertion-failed");
  const auto q = run("--json counterexample-quotient --p 3");
  EXPECT_EQ(q.status, 2);
  EXPECT_FALSE(nlohmann::json::parse(q.out)["aborted"].is_null());
}

TEST(Cli, ScanJsonIsStable) {
  const auto a = run("--json scan --max-order 10 --p 3 --seed 4");
  const auto b = run("--json scan --max-order 10 --p 3 --seed 4");
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(nlohmann::json::parse(a.out).is_array());
  EXPECT_TRUE(a.status == 0 || a.status == 2);
}

TEST(Cli, DumpWritesCsv) {
  const auto dir = std::filesystem::temp_directory_path() / "regdec-cli-dump";
  std::filesystem::remove_all(dir);
  EXPECT_EQ(run("--dump " + dir.string() + " positive-example --p 3 --q 5 --q1 11").status, 0);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".csv";
  EXPECT_GT(files, 0u);
  std::filesystem::remove_all(dir);
}
