#include <gtest/gtest.h>

#include <algorithm>

#include "regdec/error.hpp"
#include "regdec/scenarios.hpp"

using namespace regdec;

namespace {

const Assertion* find(const ScenarioReport& r, const std::string& name) {
  for (const auto& a : r.assertions)
    if (a.name == name) return &a;
  return nullptr;
}

}  // namespace

TEST(Scenarios, PositiveExample) {
  const auto r = run_positive_example(3, 5, 11);
  EXPECT_TRUE(r.passed()) << to_text(r);
  EXPECT_EQ(r.group, "Z_2 x Z_2");
  EXPECT_EQ(r.certificates.radical_order, 1u);
  EXPECT_EQ(r.notes.front(), "radical of the sign cocycle on Z_4 x Z_10 has order 10");
  EXPECT_EQ(r.minimal, true);
  EXPECT_EQ(r.det_is_zero, false);
  EXPECT_EQ(r.verdict(), "consistent");
}

TEST(Scenarios, PositiveExampleRejectsBadParameters) {
  EXPECT_THROW(run_positive_example(3, 3, 11), ParameterError);
  EXPECT_THROW(run_positive_example(3, 4, 11), ParameterError);
  EXPECT_THROW(run_positive_example(2, 5, 11), ParameterError);
  EXPECT_THROW(run_positive_example(3, 5, 5), ParameterError);
}

TEST(Scenarios, ZnExampleIsMinimalWithNonzeroDeterminant) {
  const auto r = run_counterexample_zn(5, 3);
  EXPECT_EQ(r.minimal, true);
  EXPECT_EQ(r.det_is_zero, false);
  ASSERT_NE(find(r, "det-is-zero"), nullptr);
  EXPECT_FALSE(find(r, "det-is-zero")->passed);
  EXPECT_TRUE(find(r, "minimal")->passed);
  EXPECT_EQ(r.verdict(), "consistent");
  EXPECT_THROW(run_counterexample_zn(5, 5), ParameterError);
  EXPECT_THROW(run_counterexample_zn(5, 4), ParameterError);
}

TEST(Scenarios, QuotientStopsAtTheCocycleIdentity) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto r = run_counterexample_quotient(p);
    ASSERT_TRUE(r.aborted.has_value());
    EXPECT_NE(r.aborted->find("not a 2-cocycle"), std::string::npos);
    ASSERT_NE(find(r, "cocycle-valid"), nullptr);
    EXPECT_FALSE(find(r, "cocycle-valid")->passed);
    EXPECT_FALSE(r.minimal.has_value());
  }
  EXPECT_THROW(run_counterexample_quotient(4), ParameterError);
}

TEST(Scenarios, ScanIsDeterministic) {
  ScanOptions o;
  o.max_order = 12;
  o.p = 5;
  o.seed = 7;
  const auto a = to_json(run_scan(o));
  EXPECT_EQ(a, to_json(run_scan(o)));
  o.seed = 8;
  EXPECT_NE(a, to_json(run_scan(o)));
}

TEST(Scenarios, ScanFindsMinimalInstancesSatisfyingTheIdentity) {
  ScanOptions o;
  o.max_order = 32;
  o.p = 3;
  int minimal = 0;
  for (const auto& r : run_scan(o)) {
    if (!r.minimal) continue;
    if (*r.minimal) {
      ++minimal;
      EXPECT_TRUE(r.passed()) << to_text(r);
      if (r.group != "Z_1") EXPECT_NE(r.group.find(" x "), std::string::npos) << r.group;
    }
    if (r.scenario == "scan/trivial" && r.group != "Z_1") EXPECT_FALSE(*r.minimal);
  }
  EXPECT_GT(minimal, 0);
}

TEST(Scenarios, ScanRejectsBadOptions) {
  ScanOptions o;
  o.max_order = 0;
  EXPECT_THROW(run_scan(o), ParameterError);
  o.max_order = kScanMaxOrder + 1;
  EXPECT_THROW(run_scan(o), ParameterError);
  o.max_order = 8;
  o.p = 9;
  EXPECT_THROW(run_scan(o), ParameterError);
}

TEST(Scenarios, ExamplesSuiteNames) {
  const auto rs = run_examples_suite();
  std::vector<std::string> names;
  for (const auto& r : rs) names.push_back(r.scenario);
  for (const char* n : {"examples/grassmann", "examples/nonminimal-z2xz2", "examples/pauli",
                        "examples/twisted-tensor-z2xz2", "examples/det-decomposition-vs-d", "examples/det-d"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  for (const auto& r : rs)
    if (r.scenario != "examples/det-decomposition-vs-d") EXPECT_TRUE(r.passed()) << to_text(r);
}
