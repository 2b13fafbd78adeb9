#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "isoprofile/errors.hpp"
#include "isoprofile/profile.hpp"
#include "reference_values.hpp"

namespace ref = isoprofile::reference;
using namespace isoprofile::profile;
using isoprofile::BranchError;
using isoprofile::DomainError;

namespace {

constexpr double kPi = std::numbers::pi;

const Breakpoints& bp() {
  static const Breakpoints instance = Breakpoints::compute();
  return instance;
}

}  // namespace

TEST(MinimizerSet, FormatsInKindOrder) {
  MinimizerSet s{RegionKind::S4, RegionKind::S3};
  EXPECT_EQ(s.to_string(), "S3+S4");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(RegionKind::S3));
  EXPECT_FALSE(s.contains(RegionKind::Union));
  EXPECT_EQ(MinimizerSet{}.to_string(), "");
  EXPECT_THROW(s.insert(RegionKind::FullCircle), DomainError);
}

TEST(Regime, Classification) {
  EXPECT_EQ(regime_of(0.0, bp()), Regime::SquareLike);
  EXPECT_EQ(regime_of(bp().alpha(), bp()), Regime::SquareLike);
  EXPECT_EQ(regime_of(0.15, bp()), Regime::ArcThenChord);
  EXPECT_EQ(regime_of(0.23, bp()), Regime::ArcOnly);
  EXPECT_EQ(regime_of(0.5, bp()), Regime::Notched);
}

TEST(Profile, SquareSmallArea) {
  const auto p = f(NotchParam(0.0), 0.2, bp());
  EXPECT_NEAR(p.perimeter, std::sqrt(kPi * 0.2), 1e-15);
  EXPECT_EQ(p.minimizers, MinimizerSet{RegionKind::S1});
  EXPECT_FALSE(p.theta.has_value());
}

TEST(Profile, SquareLargeArea) {
  const auto p = f(NotchParam(0.0), 0.4, bp());
  EXPECT_EQ(p.perimeter, 1.0);
  EXPECT_EQ(p.minimizers, MinimizerSet{RegionKind::S2});
}

TEST(Profile, SquareBreakpointReportsBothKinds) {
  const auto p = f(NotchParam(0.0), 1.0 / kPi, bp());
  EXPECT_NEAR(p.perimeter, 1.0, 1e-15);
  EXPECT_EQ(p.minimizers, (MinimizerSet{RegionKind::S1, RegionKind::S2}));
}

TEST(Profile, NotchedRegimeFlatSegment) {
  const NotchParam a(0.5);
  const double t = 0.5 * ((0.25 / kPi) + 0.25);
  const auto p = f(a, t, bp());
  EXPECT_DOUBLE_EQ(p.perimeter, 0.5);
  EXPECT_EQ(p.minimizers, MinimizerSet{RegionKind::S3});
}

TEST(Profile, NotchedStripEndReportsS3AndS4) {
  const NotchParam a(0.5);
  const auto p = f(a, a.notch_strip_area(), bp());
  EXPECT_EQ(p.minimizers, (MinimizerSet{RegionKind::S3, RegionKind::S4}));
  ASSERT_TRUE(p.theta.has_value());
  EXPECT_EQ(*p.theta, 0.0);
  EXPECT_NEAR(p.perimeter, 0.5, 1e-15);
}

TEST(Profile, HalfAreaUsesThetaMax) {
  const NotchParam a(0.3);
  const auto p = f(a, a.half_area(), bp());
  EXPECT_EQ(p.minimizers, MinimizerSet{RegionKind::S4});
  EXPECT_NEAR(p.perimeter, ref::kS4PerimeterA03ThetaMax, 1e-13);
  EXPECT_NEAR(*p.theta, ref::kThetaMax, 1e-13);
}

TEST(Profile, ArcThenChordRegime) {
  const NotchParam a(ref::kAMid);
  const double s = bp().sigma(a.a());
  const double t = bp().tau(a.a());
  EXPECT_EQ(f(a, 0.5 * s, bp()).minimizers, MinimizerSet{RegionKind::S1});
  EXPECT_EQ(f(a, 0.5 * (s + t), bp()).minimizers, MinimizerSet{RegionKind::S4});
  const auto at_tau = f(a, t, bp());
  EXPECT_EQ(at_tau.minimizers, (MinimizerSet{RegionKind::S2, RegionKind::S4}));
  EXPECT_NEAR(at_tau.perimeter, 1.0, 1e-10);
  EXPECT_EQ(f(a, 0.5 * (t + a.half_area()), bp()).perimeter, 1.0);
}

TEST(Profile, DomainErrors) {
  EXPECT_THROW(f(NotchParam(0.2), 0.0, bp()), DomainError);
  EXPECT_THROW(f(NotchParam(0.2), 0.49, bp()), DomainError);
  EXPECT_NO_THROW(f(NotchParam(0.2), 0.48, bp()));
}

TEST(Profile, BranchesTileTheDomain) {
  for (double av : {0.0, 0.05, 0.15, 0.23, 0.5, 0.9}) {
    const NotchParam a(av);
    const auto chain = branches(a, bp());
    ASSERT_FALSE(chain.empty());
    EXPECT_EQ(chain.front().t_begin, 0.0);
    EXPECT_EQ(chain.back().t_end, a.half_area());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      EXPECT_EQ(chain[i].t_end, chain[i + 1].t_begin);
      EXPECT_LT(chain[i].t_begin, chain[i].t_end);
    }
  }
}

TEST(DerivativeOfArcBranch, MatchesFiniteDifference) {
  const NotchParam a(0.5);
  const double t = 0.35;
  const double h = 1e-6;
  const double fd =
      (s4_perimeter_at_area(a, t + h, bp()) - s4_perimeter_at_area(a, t - h, bp())) / (2 * h);
  const double exact = dP_dt(a, t, bp());
  EXPECT_NEAR(fd / exact, 1.0, 1e-6);
  EXPECT_NEAR(exact, std::sin(*f(a, t, bp()).theta) / 0.5, 1e-15);
}

TEST(DerivativeOfArcBranch, ThrowsOffBranch) {
  EXPECT_THROW(dP_dt(NotchParam(0.5), 0.01, bp()), BranchError);
  EXPECT_THROW(dP_dt(NotchParam(0.0), 0.3, bp()), BranchError);
}

TEST(SqrtPiDomination, EqualityBeforeTransitionStrictAfter) {
  const NotchParam a(0.5);
  const auto before = sqrt_pi_dominates(a, 0.05, bp());
  EXPECT_TRUE(before.holds);
  EXPECT_FALSE(before.strict);
  const auto after = sqrt_pi_dominates(a, 0.3, bp());
  EXPECT_TRUE(after.holds);
  EXPECT_TRUE(after.strict);
  EXPECT_GT(after.margin, 0.0);
  EXPECT_EQ(sqrt_pi_dominates(a, 0.0, bp()).margin, 0.0);
  EXPECT_THROW(sqrt_pi_dominates(a, 0.4, bp()), DomainError);
}

TEST(Profile, NotchedFourPieceShape) {
  const NotchParam a(0.9);
  const auto chain = branches(a, bp());
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[1].kind, RegionKind::S3);
  EXPECT_NEAR(chain[0].t_end, 0.01 / kPi, 1e-15);
  EXPECT_NEAR(chain[1].t_end, 0.09, 1e-15);
}
