#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "regdec/report.hpp"

using namespace regdec;

namespace {

ScenarioReport sample() {
  ScenarioReport r;
  r.scenario = "sample";
  r.parameters = {{"p", 3}, {"t", 5}};
  r.field = "GF(3)";
  r.group = "Z_2";
  r.minimal = true;
  r.det_is_zero = false;
  r.det = "2";
  r.certificates.radical_order = 1;
  r.check("first", true);
  r.notes.push_back("n");
  return r;
}

}  // namespace

TEST(Report, Verdict) {
  auto r = sample();
  EXPECT_EQ(r.verdict(), "consistent");
  r.det_is_zero = true;
  EXPECT_EQ(r.verdict(), "counterexample");
  r.minimal = false;
  EXPECT_EQ(r.verdict(), "consistent");
  r.det_is_zero = false;
  EXPECT_EQ(r.verdict(), "counterexample");
  r.minimal.reset();
  EXPECT_EQ(r.verdict(), "");
}

TEST(Report, PassedNeedsEveryAssertionAndNoAbort) {
  auto r = sample();
  EXPECT_TRUE(r.passed());
  r.check("second", false, "why");
  EXPECT_FALSE(r.passed());
  auto s = sample();
  s.aborted = "stopped";
  EXPECT_FALSE(s.passed());
}

TEST(Report, JsonKeyOrder) {
  const auto j = nlohmann::ordered_json::parse(to_json(sample()));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "parameters", "field", "group", "minimal", "det_is_zero", "det",
                                            "certificates", "assertions", "notes", "aborted", "conjecture_verdict",
                                            "status"}));
  std::vector<std::string> cert;
  for (auto it = j["certificates"].begin(); it != j["certificates"].end(); ++it) cert.push_back(it.key());
  EXPECT_EQ(cert, (std::vector<std::string>{"equal_columns", "radical_order", "center_dimension", "square_identity"}));
  EXPECT_EQ(j["parameters"].begin().key(), "p");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_TRUE(j["aborted"].is_null());
  EXPECT_EQ(j["conjecture_verdict"], "consistent");
}

TEST(Report, JsonIsByteStable) {
  const auto a = to_json(std::vector{sample(), sample()});
  EXPECT_EQ(a, to_json(std::vector{sample(), sample()}));
  EXPECT_EQ(nlohmann::json::parse(a).size(), 2u);
}

TEST(Report, TextMentionsFailures) {
  auto r = sample();
  r.check("broken", false, "detail");
  const auto t = to_text(r);
  EXPECT_NE(t.find("[FAILED] broken: detail"), std::string::npos);
  EXPECT_NE(t.find("verdict: consistent"), std::string::npos);
}

TEST(Report, DumpWritesFlatFileNames) {
  const auto dir = std::filesystem::temp_directory_path() / "regdec-report-test";
  std::filesystem::remove_all(dir);
  auto r = sample();
  r.scenario = "examples/sample";
  const auto f = Field::make(3, 1);
  r.matrices.emplace_back("M", decomposition_matrix(Bicharacter(FinAbGroup({2}), f, {f->from_int(-1)})));
  const auto paths = dump_matrices({r}, dir.string());
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(std::filesystem::path(paths[0]).filename(), "examples-sample-M.csv");
  std::ifstream in(paths[0]);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "\"beta\",\"(0)\",\"(1)\"");
  std::filesystem::remove_all(dir);
}
