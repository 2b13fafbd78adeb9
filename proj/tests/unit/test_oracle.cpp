#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isoprofile/errors.hpp"
#include "isoprofile/oracle.hpp"
#include "isoprofile/profile.hpp"

using namespace isoprofile::oracle;
using isoprofile::DomainError;

namespace {

constexpr double kPi = std::numbers::pi;

const Breakpoints& bp() {
  static const Breakpoints instance = Breakpoints::compute();
  return instance;
}

}  // namespace

TEST(Oracle, EveryCandidateHasTheRequestedArea) {
  const NotchParam a(0.3);
  const double t = 0.25;
  const auto all = enumerate_candidates(a, t, 20, bp());
  ASSERT_FALSE(all.empty());
  for (const auto& c : all) {
    EXPECT_NEAR(c.area, t, 1e-12) << c.region.describe();
    const auto ap = isoprofile::geometry::region_area_perimeter(a, c.region, bp().theta_max());
    EXPECT_NEAR(ap.perimeter, c.perimeter, 1e-15);
  }
}

TEST(Oracle, ConnectedCandidatesCoverExpectedKinds) {
  const NotchParam a(0.3);
  const auto list = connected_candidates(a, 0.25, bp());
  auto count = [&](RegionKind k) {
    return std::count_if(list.begin(), list.end(), [k](const Candidate& c) { return c.kind() == k; });
  };
  EXPECT_GE(count(RegionKind::S1), 1);
  EXPECT_EQ(count(RegionKind::S2), 1);
  EXPECT_EQ(count(RegionKind::S4), 2);
  EXPECT_EQ(count(RegionKind::S3), 0);  // 0.25 > a(1-a) = 0.21
  EXPECT_EQ(count(RegionKind::Union), 0);
}

TEST(Oracle, MinimumMatchesProfileExample) {
  const NotchParam a(0.2);
  const auto best = oracle_min(a, 0.45, 200, bp());
  EXPECT_NEAR(best.perimeter, isoprofile::profile::f(a, 0.45, bp()).perimeter, 1e-12);
}

TEST(Oracle, MinimumMatchesFullEnumeration) {
  const NotchParam a(0.6);
  for (double t : {0.02, 0.1, 0.2, 0.3}) {
    const auto all = enumerate_candidates(a, t, 30, bp());
    double lowest = INFINITY;
    for (const auto& c : all) lowest = std::min(lowest, c.perimeter);
    EXPECT_EQ(oracle_min(a, t, 30, bp()).perimeter, lowest) << "t = " << t;
  }
}

TEST(Oracle, MinimumAcrossRegimes) {
  for (double av : {0.0, 0.07, 0.15, 0.235, 0.5, 0.85}) {
    const NotchParam a(av);
    for (int k = 1; k <= 25; ++k) {
      const double t = a.half_area() * k / 25.0;
      const auto point = isoprofile::profile::f(a, t, bp());
      const auto best = oracle_min(a, t, 100, bp());
      EXPECT_NEAR(best.perimeter, point.perimeter, 1e-9) << "a = " << av << ", t = " << t;
    }
  }
}

TEST(Oracle, BestByKindOrderAndUnions) {
  const NotchParam a(0.5);
  const auto kinds = best_by_kind(a, 0.3, 50, bp());
  ASSERT_FALSE(kinds.empty());
  EXPECT_EQ(kinds.front().kind(), RegionKind::S1);
  EXPECT_EQ(kinds.back().kind(), RegionKind::Union);
  for (std::size_t i = 0; i + 1 < kinds.size(); ++i) {
    EXPECT_LT(static_cast<int>(kinds[i].kind()), static_cast<int>(kinds[i + 1].kind()));
  }
}

TEST(Oracle, RejectsBadArguments) {
  const NotchParam a(0.5);
  EXPECT_THROW(enumerate_candidates(a, 0.0, 50, bp()), DomainError);
  EXPECT_THROW(enumerate_candidates(a, 0.4, 50, bp()), DomainError);
  EXPECT_THROW(enumerate_candidates(a, 0.1, 5, bp()), DomainError);
}

TEST(SecondCase, BoundHolds) {
  for (int k = 0; k <= 100; ++k) {
    const double theta = kPi / 2 + (kPi / 2) * k / 100.0;
    const auto b = secondcase_bound(theta);
    EXPECT_GE(b.lhs, b.rhs) << "theta = " << theta;
  }
  const auto end = secondcase_bound(kPi);
  EXPECT_NEAR(end.lhs, kPi * kPi, 1e-14);
  EXPECT_NEAR(end.rhs, kPi * kPi / 2, 1e-14);
  EXPECT_THROW(secondcase_bound(1.0), DomainError);
  EXPECT_THROW(secondcase_bound(3.2), DomainError);
}
