#include "hexafern/formulas.hpp"
#include "hexafern/verify.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

using namespace hexafern;

namespace {

SuiteConfig small(const std::string& suite) {
  SuiteConfig c;
  c.suites = {suite};
  c.bounds.x_max = 1;
  c.bounds.y_max = 2;
  c.bounds.z_max = 1;
  c.bounds.fern_len_max = 2;
  c.bounds.pbc_max = 2;
  c.bounds.t_sum_max = 3;
  c.bounds.mn_max = 3;
  c.bounds.lgv_pos_max = 4;
  c.bounds.krattenthaler_points = 4;
  c.threads = 2;
  return c;
}

}  // namespace

TEST(Verify, KuoSinglePoints) {
  const Evaluator oracle = oracle_evaluator();
  const Evaluator formula = formula_evaluator();
  for (bool primed : {false, true}) {
    EXPECT_TRUE(check_kuo_even(1, 2, 1, {1, 1}, oracle, primed).ok);
    EXPECT_TRUE(check_kuo_even(2, 3, 2, {2, 1}, formula, primed).ok);
    EXPECT_TRUE(check_kuo_odd(0, 2, 1, {1}, oracle, primed).ok);
    EXPECT_TRUE(check_kuo_odd(1, 3, 2, {2, 1, 1}, formula, primed).ok);
  }
  EXPECT_THROW(check_kuo_even(1, 2, 1, {1}, oracle), std::invalid_argument);
}

TEST(Verify, ReductionsAndSplits) {
  const Evaluator M = oracle_evaluator();
  EXPECT_TRUE(check_z0_reduction(1, 2, {2, 1}, M).ok);
  EXPECT_TRUE(check_z0_reduction(1, 2, {2, 1}, M, true).ok);
  EXPECT_TRUE(check_base_split(SplitKind::x_zero, 0, 2, 1, {1, 2}, M).ok);
  EXPECT_TRUE(check_base_split(SplitKind::small_y, 2, 1, 1, {1}, M).ok);
  EXPECT_THROW(check_base_split(SplitKind::small_y, 2, 3, 1, {1}, M), std::invalid_argument);
}

TEST(Verify, DegenerateElimination) {
  EXPECT_EQ(eliminate_degenerate({1, 0, 0}, 2), (std::pair<FernSeq, int>{{1}, 2}));
  EXPECT_EQ(eliminate_degenerate({0, 2, 1}, 1), (std::pair<FernSeq, int>{{1}, 3}));
  EXPECT_EQ(eliminate_degenerate({1, 0, 2}, 0), (std::pair<FernSeq, int>{{3}, 0}));
  EXPECT_EQ(eliminate_degenerate({0, 1, 0, 2, 1}, 0), (std::pair<FernSeq, int>{{1}, 3}));
  EXPECT_EQ(eliminate_degenerate({0}, 4), (std::pair<FernSeq, int>{{}, 4}));
  EXPECT_TRUE(check_degenerate_holes(1, 1, 1, {1, 0, 2}, false, oracle_evaluator()).ok);
  EXPECT_TRUE(check_degenerate_holes(1, 2, 0, {0, 1, 1}, true, oracle_evaluator()).ok);
}

TEST(Verify, OtherIdentities) {
  const Evaluator M = oracle_evaluator();
  EXPECT_TRUE(check_rohatgi(1, 2, 1, 2, false, M).ok);
  EXPECT_TRUE(check_rohatgi(1, 2, 1, 2, true, M).ok);
  EXPECT_TRUE(check_corollary_recurrences(1, 2, 1, {1, 2}, false, M).ok);
  EXPECT_TRUE(check_corollary_recurrences(1, 3, 0, {2, 1, 1}, true, formula_evaluator()).ok);
  EXPECT_TRUE(check_factorization(1, 1, 1, {1}, M).ok);
  EXPECT_TRUE(check_factorization(2, 1, 1, {1}, M).ok);
  EXPECT_TRUE(check_factorization(1, 1, 0, {}, M).ok);
}

TEST(Verify, SmallSweepsPass) {
  for (const auto& suite : suite_names()) {
    if (suite == "memo") continue;
    const auto r = run_suite(suite, small(suite));
    EXPECT_TRUE(r.passed()) << report_text(r);
    EXPECT_GT(r.cases_run, 0U) << suite;
    EXPECT_EQ(r.executed.size(), r.cases_run);
  }
}

TEST(Verify, EmptySweepPasses) {
  SuiteConfig c = small("main");
  c.bounds.x_max = -1;
  const auto r = run_suite("main", c);
  EXPECT_EQ(r.cases_run, 0U);
  EXPECT_TRUE(r.passed());
}

TEST(Verify, FaultInjectionIsCaught) {
  SuiteConfig c = small("kuo");
  c.inject_fault = true;
  const auto r = run_suite("kuo", c);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures.size(), 4 * r.cases_run);  // every comparison is off by one
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  SuiteConfig one = small("main");
  one.inject_fault = true;
  one.threads = 1;
  SuiteConfig many = one;
  many.threads = 4;
  const auto a = run_suite("main", one), b = run_suite("main", many);
  ASSERT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    EXPECT_EQ(a.failures[i].params, b.failures[i].params);
    EXPECT_EQ(a.failures[i].lhs, b.failures[i].lhs);
  }
  EXPECT_EQ(a.executed, b.executed);
}

TEST(Verify, MemoSuiteOnSmallRegions) {
  SuiteConfig c = small("memo");
  c.bounds.y_max = 1;
  c.bounds.fern_len_max = 1;
  c.bounds.pbc_max = 1;
  c.bounds.t_sum_max = 2;
  c.bounds.mn_max = 2;
  c.bounds.lgv_k_max = 2;
  EXPECT_TRUE(run_suite("memo", c).passed());
}

TEST(Verify, MemoSuiteReportsCappedRegions) {
  SuiteConfig c = small("memo");
  c.no_memo_cap = 50;
  const auto r = run_suite("memo", c);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.failures.front().note.find("node cap"), std::string::npos);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope", SuiteConfig{}), std::invalid_argument); }

TEST(Verify, JsonReport) {
  SuiteConfig c = small("proctor");
  c.inject_fault = true;
  const auto doc = nlohmann::json::parse(report_json({run_suite("proctor", c)}));
  ASSERT_TRUE(doc.is_array());
  const auto& r = doc.at(0);
  EXPECT_EQ(r.at("suite"), "proctor");
  EXPECT_GT(r.at("cases").get<int>(), 0);
  EXPECT_EQ(r.at("skipped"), 0);
  ASSERT_FALSE(r.at("failures").empty());
  const auto& f = r.at("failures").at(0);
  EXPECT_TRUE(f.contains("params") && f.contains("lhs") && f.contains("rhs") && f.contains("note"));
}

TEST(Verify, TouchedRegionsAreDistinct) {
  const auto regions = touched_regions(small("all").bounds);
  std::set<std::string> names;
  for (const auto& s : regions) EXPECT_TRUE(names.insert(describe(s)).second);
  EXPECT_GT(regions.size(), 100U);
}
