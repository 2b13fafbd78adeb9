#include <gtest/gtest.h>

#include "isoprofile/verify.hpp"

using namespace isoprofile::verify;
using isoprofile::solvers::Breakpoints;

namespace {

const Breakpoints& bp() {
  static const Breakpoints instance = Breakpoints::compute();
  return instance;
}

}  // namespace

TEST(StratifiedGrid, CoversAllRegimesWithoutBoundaries) {
  const auto grid = stratified_notch_grid(20, bp());
  ASSERT_EQ(grid.size(), 20u);
  int counts[4] = {0, 0, 0, 0};
  for (double a : grid) {
    EXPECT_NE(a, bp().alpha());
    EXPECT_NE(a, bp().beta());
    EXPECT_NE(a, bp().gamma());
    if (a < bp().alpha()) ++counts[0];
    else if (a < bp().beta()) ++counts[1];
    else if (a < bp().gamma()) ++counts[2];
    else ++counts[3];
  }
  for (int c : counts) EXPECT_EQ(c, 5);
}

TEST(Suites, LemmasPassAndAreDeterministic) {
  VerifyOptions opts;
  const auto first = verify_lemmas(bp(), opts);
  EXPECT_TRUE(first.all_passed()) << format_report(first);
  EXPECT_EQ(format_report(first), format_report(verify_lemmas(bp(), opts)));
  int technical = 0;
  for (const auto& c : first.checks) technical += c.name.rfind("technical(", 0) == 0;
  EXPECT_EQ(technical, 7);
}

TEST(Suites, LemmasPassForAnotherSeed) {
  VerifyOptions opts;
  opts.seed = 7;
  const auto report = verify_lemmas(bp(), opts);
  EXPECT_TRUE(report.all_passed()) << format_report(report);
}

TEST(Suites, Section3Passes) {
  const auto report = verify_section3({});
  EXPECT_TRUE(report.all_passed()) << format_report(report);
}

TEST(Suites, OracleSmallGridPasses) {
  VerifyOptions opts;
  opts.grid_a = 8;
  opts.grid_t = 40;
  opts.resolution = 50;
  const auto report = verify_oracle(bp(), opts);
  EXPECT_TRUE(report.all_passed()) << format_report(report);
}

TEST(Report, FlagsFailures) {
  SuiteReport report{"demo", {{"good", true, 1.0, ""}, {"bad", false, -1.0, "x"}}};
  EXPECT_FALSE(report.all_passed());
  const auto text = format_report(report);
  EXPECT_NE(text.find("FAIL  bad"), std::string::npos);
  EXPECT_NE(text.find("demo: 1/2 checks passed"), std::string::npos);
}
