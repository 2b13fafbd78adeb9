#include "isoprofile/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "isoprofile/corner_checks.hpp"
#include "isoprofile/geometry.hpp"
#include "isoprofile/oracle.hpp"
#include "isoprofile/profile.hpp"

namespace isoprofile::verify {

namespace {

using geometry::NotchParam;
using geometry::RegionKind;
using solvers::Breakpoints;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

// Collects sub-check margins; the check passes when every margin is positive.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void require(const std::string& what, double margin) {
    if (!seen_.empty()) seen_ += "; ";
    seen_ += what + " " + fmt(margin);
    worst_ = std::min(worst_, margin);
    if (!(margin > 0.0)) failed_ = true;
  }

  CheckResult finish() && { return {std::move(name_), !failed_, worst_, std::move(seen_)}; }

 private:
  std::string name_;
  std::string seen_;
  double worst_ = kInf;
  bool failed_ = false;
};

// Running minimum over samples.
struct MinTracker {
  double value = kInf;
  void add(double v) { value = std::min(value, v); }
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double dt_dtheta(double a, double theta) {
  const double s = std::sin(theta);
  return (1.0 - a) * (1.0 - a) * (s - theta * std::cos(theta)) / (s * s * s);
}

CheckResult technical_1(const Breakpoints& bp, std::mt19937_64& rng) {
  Check check("technical(1) theta(t) exists and is unique");
  const double tm = bp.theta_max();
  check.require("theta_max-pi/4", tm - kPi / 4.0);
  check.require("pi/2-theta_max", kPi / 2.0 - tm);
  check.require("1e-12-|residual|", 1e-12 - std::abs(solvers::theta_max_residual(tm)));
  MinTracker roundtrip, slope;
  for (int i = 0; i < 20; ++i) {
    const NotchParam a(uniform(rng, 0.0, 0.95));
    for (int j = 0; j < 20; ++j) {
      const double t = uniform(rng, a.notch_strip_area(), a.half_area());
      const double theta = bp.theta_of_area(a, t);
      roundtrip.add(1e-11 - std::abs(geometry::s4_area(a, theta, tm) - t));
    }
    for (int k = 1; k <= 100; ++k) slope.add(dt_dtheta(a.a(), tm * k / 100.0));
  }
  check.require("roundtrip(1e-11)", roundtrip.value);
  check.require("min dt/dtheta", slope.value);
  return std::move(check).finish();
}

CheckResult technical_2(const Breakpoints& bp, std::mt19937_64& rng) {
  Check check("technical(2) dP/dt = sin(theta)/(1-a) > 0, d2P/dt2 > 0");
  MinTracker fd, positive, convex;
  const double h = bp.config().fd_step;
  for (int i = 0; i < 10; ++i) {
    const NotchParam a(uniform(rng, 0.0, 0.95));
    const double lo = a.notch_strip_area();
    const double hi = a.half_area();
    auto p = [&](double t) { return profile::s4_perimeter_at_area(a, t, bp); };
    for (int k = 1; k <= 100; ++k) {
      const double t = lo + (hi - lo) * k / 101.0;
      const double theta = bp.theta_of_area(a, t);
      const double exact = std::sin(theta) / (1.0 - a.a());
      const double numeric = (p(t + h) - p(t - h)) / (2.0 * h);
      fd.add(1e-6 - std::abs(numeric - exact) / exact);
      positive.add(exact);
    }
    const double step = (hi - lo) / 200.0;
    for (int k = 1; k < 200; ++k) {
      const double t = lo + step * k;
      convex.add(p(t - step) - 2.0 * p(t) + p(t + step) + 1e-9);
    }
  }
  check.require("fd rel err vs 1e-6", fd.value);
  check.require("min dP/dt", positive.value);
  check.require("second diff + 1e-9", convex.value);
  return std::move(check).finish();
}

CheckResult technical_3(const Breakpoints& bp, std::mt19937_64& rng) {
  Check check("technical(3) P(S4) < sqrt(2)(1-a)");
  MinTracker gap;
  for (int i = 0; i < 100; ++i) {
    const NotchParam a(uniform(rng, 0.0, 0.99));
    const double theta = uniform(rng, 0.0, bp.theta_max());
    gap.add(std::numbers::sqrt2 * (1.0 - a.a()) - geometry::s4_perimeter(a, theta, bp.theta_max()));
  }
  for (double av : {0.0, 0.5, 0.9}) {
    const NotchParam a(av);
    gap.add(std::numbers::sqrt2 * (1.0 - av) - geometry::s4_perimeter(a, bp.theta_max(), bp.theta_max()));
  }
  check.require("min gap", gap.value);
  return std::move(check).finish();
}

CheckResult technical_4(const Breakpoints& bp) {
  Check check("technical(4) unit-perimeter pair (a(t), theta(t)) for t <= t0");
  check.require("0.01-|t0-0.48|", 0.01 - std::abs(bp.t0() - 0.48));
  MinTracker increasing_t, increasing_a, residual;
  double previous_t = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double t = solvers::t_of_theta_unit_perimeter(bp.theta_max() * k / 100.0);
    increasing_t.add(t - previous_t);
    previous_t = t;
  }
  double previous_a = -1.0;
  for (int k = 1; k <= 50; ++k) {
    const double t = bp.t0() * k / 50.0;
    const auto pair = solvers::a_of_t(t, bp);
    increasing_a.add(pair.a - previous_a);
    previous_a = pair.a;
    const NotchParam a(pair.a);
    const double tm = bp.theta_max();
    residual.add(1e-10 - std::max(std::abs(geometry::s4_perimeter(a, pair.theta, tm) - 1.0),
                                  std::abs(geometry::s4_area(a, pair.theta, tm) - t)));
  }
  check.require("t(theta) increments", increasing_t.value);
  check.require("a(t) increments", increasing_a.value);
  check.require("1e-10-residual", residual.value);
  bool rejected = false;
  try {
    solvers::a_of_t(bp.t0() + 1e-3, bp);
  } catch (const DomainError&) {
    rejected = true;
  }
  check.require("t>t0 rejected", rejected ? 1.0 : -1.0);
  return std::move(check).finish();
}

CheckResult technical_5(const Breakpoints& bp, std::mt19937_64& rng) {
  Check check("technical(5) P(S4) < 1 for a > beta");
  check.require("0.01-|beta-0.23|", 0.01 - std::abs(bp.beta() - 0.23));
  MinTracker gap;
  for (int i = 0; i < 200; ++i) {
    const NotchParam a(uniform(rng, bp.beta() + 1e-6, 0.99));
    const double theta = uniform(rng, 0.0, bp.theta_max());
    gap.add(1.0 - geometry::s4_perimeter(a, theta, bp.theta_max()));
  }
  check.require("min 1-P", gap.value);
  const NotchParam at_beta(bp.beta());
  check.require("1e-10-|P(beta,theta_max)-1|",
                1e-10 - std::abs(geometry::s4_perimeter(at_beta, bp.theta_max(), bp.theta_max()) - 1.0));
  return std::move(check).finish();
}

CheckResult technical_6(const Breakpoints& bp) {
  Check check("technical(6) sigma(a): P(S4) = sqrt(pi |S4|) on [alpha, gamma]");
  check.require("0.01-|alpha-0.10|", 0.01 - std::abs(bp.alpha() - 0.10));
  check.require("1e-12-|gamma-1/(1+pi)|", 1e-12 - std::abs(bp.gamma() - 1.0 / (1.0 + kPi)));
  MinTracker sigma_res, tau_res;
  const double tm = bp.theta_max();
  for (int k = 0; k < 20; ++k) {
    const double av = bp.alpha() + (bp.gamma() - bp.alpha()) * k / 19.0;
    const NotchParam a(av);
    const double theta = solvers::sigma_theta(av, bp);
    const double p = geometry::s4_perimeter(a, theta, tm);
    sigma_res.add(1e-10 - std::abs(p * p - kPi * geometry::s4_area(a, theta, tm)));
  }
  for (int k = 0; k < 20; ++k) {
    const double av = bp.alpha() + (bp.beta() - bp.alpha()) * k / 19.0;
    const NotchParam a(av);
    tau_res.add(1e-10 - std::abs(profile::s4_perimeter_at_area(a, bp.tau(av), bp) - 1.0));
  }
  check.require("sigma residual", sigma_res.value);
  check.require("tau residual", tau_res.value);
  return std::move(check).finish();
}

CheckResult technical_7(const Breakpoints& bp) {
  Check check("technical(7) sigma decreasing, sigma(alpha)=1/pi, sigma(gamma)=(1-gamma)^2/pi");
  MinTracker decreasing;
  double previous = kInf;
  for (int k = 0; k < 50; ++k) {
    const double s = bp.sigma(bp.alpha() + (bp.gamma() - bp.alpha()) * k / 49.0);
    decreasing.add(previous - s);
    previous = s;
  }
  const double g = bp.gamma();
  check.require("sigma decrements", decreasing.value);
  check.require("1e-10-|sigma(alpha)-1/pi|", 1e-10 - std::abs(bp.sigma(bp.alpha()) - 1.0 / kPi));
  check.require("1e-10-|sigma(gamma)-(1-g)^2/pi|", 1e-10 - std::abs(bp.sigma(g) - (1.0 - g) * (1.0 - g) / kPi));
  return std::move(check).finish();
}

CheckResult ffacts(const Breakpoints& bp, std::mt19937_64& rng) {
  Check check("ffacts sqrt(pi t) >= f_a(t), strict for t > T");
  MinTracker weak, strict;
  for (int i = 0; i < 200; ++i) {
    const NotchParam a(uniform(rng, 0.0, 0.95));
    const double width = 1.0 - a.a();
    const double upper = std::min({kPi / 4.0, kPi * width * width / 2.0, a.half_area()});
    const double t = uniform(rng, 1e-6, upper);
    const auto d = profile::sqrt_pi_dominates(a, t, bp);
    weak.add(d.margin + 1e-12);
    if (t > bp.transition(a.a()) + 1e-6) strict.add(d.strict ? d.margin : -1.0);
  }
  check.require("sqrt(pi t)-f+1e-12", weak.value);
  check.require("strict margin", strict.value);
  return std::move(check).finish();
}

CheckResult profile_continuity(const Breakpoints& bp) {
  Check check("profile.continuity |f(t-)-f(t+)| < 1e-9 at branch and regime boundaries");
  MinTracker jump, regime_gap;
  for (double av : stratified_notch_grid(50, bp)) {
    const NotchParam a(av);
    const auto chain = profile::branches(a, bp);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const double t = chain[i].t_end;
      const double left = profile::branch_perimeter(a, chain[i].kind, t, bp);
      const double right = profile::branch_perimeter(a, chain[i + 1].kind, t, bp);
      jump.add(1e-9 - std::abs(left - right));
    }
  }
  // At a = alpha, beta, gamma both neighbouring regimes must give the same profile.
  const std::pair<double, std::pair<profile::Regime, profile::Regime>> seams[] = {
      {bp.alpha(), {profile::Regime::SquareLike, profile::Regime::ArcThenChord}},
      {bp.beta(), {profile::Regime::ArcThenChord, profile::Regime::ArcOnly}},
      {bp.gamma(), {profile::Regime::ArcOnly, profile::Regime::Notched}},
  };
  for (const auto& [av, regimes] : seams) {
    const NotchParam a(av);
    for (int k = 1; k <= 200; ++k) {
      const double t = a.half_area() * k / 200.0;
      const double lower = profile::f_in_regime(a, t, regimes.first, bp).perimeter;
      const double upper = profile::f_in_regime(a, t, regimes.second, bp).perimeter;
      regime_gap.add(1e-9 - std::abs(lower - upper));
    }
  }
  check.require("branch jumps", jump.value);
  check.require("regime seams", regime_gap.value);
  return std::move(check).finish();
}

CheckResult profile_monotone(const Breakpoints& bp) {
  Check check("profile.monotone f_a non-decreasing; f_a <= 1 (a <= beta), < sqrt2(1-a)");
  MinTracker increments, bound_one, bound_sqrt2;
  for (double av : stratified_notch_grid(20, bp)) {
    const NotchParam a(av);
    double previous = 0.0;
    double largest = 0.0;
    for (int k = 1; k <= 1000; ++k) {
      const double value = profile::f(a, a.half_area() * k / 1000.0, bp).perimeter;
      increments.add(value - previous + 1e-12);
      previous = value;
      largest = std::max(largest, value);
    }
    if (av <= bp.beta()) bound_one.add(1.0 - largest + 1e-12);
    bound_sqrt2.add(std::numbers::sqrt2 * (1.0 - av) - largest);
  }
  check.require("increments+1e-12", increments.value);
  check.require("1-max f", bound_one.value);
  check.require("sqrt2(1-a)-max f", bound_sqrt2.value);
  return std::move(check).finish();
}

CheckResult profile_subadditive(const Breakpoints& bp, std::mt19937_64& rng) {
  Check check("profile.subadditivity f(t1+t2) < f(t1)+f(t2) for t1 <= T (numerical restatement)");
  MinTracker gap;
  for (int i = 0; i < 200; ++i) {
    const NotchParam a(uniform(rng, 0.0, 0.95));
    const double half = a.half_area();
    const double t1 = uniform(rng, 1e-6, std::min(bp.transition(a.a()), half - 1e-6));
    const double t2 = uniform(rng, 1e-6, half - t1);
    const double whole = profile::f(a, t1 + t2, bp).perimeter;
    gap.add(profile::f(a, t1, bp).perimeter + profile::f(a, t2, bp).perimeter - whole - 1e-12);
  }
  check.require("f(t1)+f(t2)-f(t1+t2)-1e-12", gap.value);
  return std::move(check).finish();
}

CheckResult profile_square(const Breakpoints& bp) {
  Check check("profile.square f_0 = sqrt(pi t) on (0,1/pi], 1 on [1/pi,1/2]");
  MinTracker err;
  const NotchParam a(0.0);
  for (int k = 1; k <= 1000; ++k) {
    const double t = 0.5 * k / 1000.0;
    const double expected = t <= 1.0 / kPi ? std::sqrt(kPi * t) : 1.0;
    err.add(1e-12 - std::abs(profile::f(a, t, bp).perimeter - expected));
  }
  check.require("1e-12-|f-square|", err.value);
  return std::move(check).finish();
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<double> stratified_notch_grid(int count, const Breakpoints& bp) {
  const double edges[] = {0.0, bp.alpha(), bp.beta(), bp.gamma(), 0.95};
  std::vector<double> out;
  for (int regime = 0; regime < 4; ++regime) {
    const int n = count / 4 + (regime == 3 ? count % 4 : 0);
    for (int j = 0; j < n; ++j) {
      out.push_back(edges[regime] + (edges[regime + 1] - edges[regime]) * (j + 0.5) / n);
    }
  }
  return out;
}

SuiteReport verify_lemmas(const Breakpoints& bp, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  SuiteReport report{"lemmas", {}};
  report.checks.push_back(technical_1(bp, rng));
  report.checks.push_back(technical_2(bp, rng));
  report.checks.push_back(technical_3(bp, rng));
  report.checks.push_back(technical_4(bp));
  report.checks.push_back(technical_5(bp, rng));
  report.checks.push_back(technical_6(bp));
  report.checks.push_back(technical_7(bp));
  report.checks.push_back(ffacts(bp, rng));
  report.checks.push_back(profile_continuity(bp));
  report.checks.push_back(profile_monotone(bp));
  report.checks.push_back(profile_subadditive(bp, rng));
  report.checks.push_back(profile_square(bp));
  return report;
}

SuiteReport verify_section3(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  SuiteReport report{"section3", {}};

  {
    Check check("section3.equal-area triangles ACK and BCP");
    MinTracker err;
    for (int i = 0; i < 1000; ++i) {
      const double theta = uniform(rng, 0.01, kPi / 2.0 - 0.01);
      const double ell = uniform(rng, 0.1, 10.0);
      const double eps = uniform(rng, 1e-4, 0.99) * ell * std::cos(theta);
      const auto d = corner::make_deformation(theta, ell, eps);
      auto tri = [](corner::Point u, corner::Point v, corner::Point w) {
        return 0.5 * std::abs((v.x - u.x) * (w.y - u.y) - (w.x - u.x) * (v.y - u.y));
      };
      const double ack = tri(d.a(), d.c(), d.k());
      const double bcp = tri(d.b(), d.c(), d.p());
      err.add(1e-12 - std::abs(ack - bcp) / std::max(ack, bcp));
    }
    check.require("1e-12-rel diff", err.value);
    report.checks.push_back(std::move(check).finish());
  }
  {
    Check check("section3.implication strict_improvement => polyline gain > 0");
    MinTracker gain;
    int implied = 0;
    for (int i = 0; i < 1000; ++i) {
      const double theta = uniform(rng, 0.01, kPi / 2.0 - 0.01);
      const double ell = uniform(rng, 0.1, 10.0);
      const double eps = uniform(rng, 1e-4, 0.5) * ell * std::cos(theta);
      if (!corner::strict_improvement(theta, ell, eps)) continue;
      ++implied;
      gain.add(corner::polyline_perimeter_gain(theta, ell, eps));
    }
    check.require("min gain", gain.value);
    check.require("samples with premise", implied);
    report.checks.push_back(std::move(check).finish());
  }
  {
    Check check("section3.small-eps threshold for the segment inequality");
    MinTracker threshold, below;
    for (int i = 0; i < 100; ++i) {
      const double theta = uniform(rng, 0.01, kPi / 2.0 - 0.01);
      const double ell = uniform(rng, 0.1, 10.0);
      const double eps0 = corner::improvement_threshold(theta, ell);
      threshold.add(eps0);
      for (int k = 1; k <= 20; ++k) {
        below.add(corner::lower_perim2_margin(theta, ell, eps0 * k / 21.0));
      }
    }
    check.require("min eps0", threshold.value);
    check.require("min margin below eps0", below.value);
    report.checks.push_back(std::move(check).finish());
  }
  {
    Check check("section3.arc lambda-quadratic and shrinking secant");
    MinTracker quadratic, shrink;
    for (int i = 0; i < 100; ++i) {
      const double theta1 = uniform(rng, 0.05, kPi / 2.0 - 0.05);
      const double lambda = uniform(rng, 0.01, 0.99) * corner::arc_lambda_bound(theta1);
      quadratic.add(corner::arc_rhs(theta1, lambda));
      const double theta = 0.5 * theta1;
      // The exact chord-area term shrinks like l/12, so a small enough secant wins.
      const double ell = std::min(1.0, 6.0 * corner::arc_rhs(theta1, lambda));
      shrink.add(corner::arc_improvement_margin(theta, theta1, ell, lambda));
    }
    check.require("min rhs", quadratic.value);
    check.require("min margin at small l", shrink.value);
    report.checks.push_back(std::move(check).finish());
  }
  {
    Check check("section3.secondcase P^2 >= pi t on [pi/2, pi]");
    MinTracker gap;
    for (int i = 0; i < 1000; ++i) {
      const auto b = oracle::secondcase_bound(uniform(rng, kPi / 2.0, kPi));
      gap.add(b.lhs - b.rhs + 1e-12);
    }
    check.require("lhs-rhs+1e-12", gap.value);
    report.checks.push_back(std::move(check).finish());
  }
  {
    Check check("section3.chord-area third derivative g'''(0) = 1/(2r)");
    MinTracker err;
    const double h = 1e-3;
    for (double r : {0.5, 1.0, 2.0, 5.0}) {
      auto g = [r](double ell) { return geometry::circular_segment_area(r, ell); };
      const double third = (g(3 * h) - 3 * g(2 * h) + 3 * g(h) - g(0.0)) / (h * h * h);
      err.add(0.01 - std::abs(third * 2.0 * r - 1.0));
    }
    check.require("0.01-rel err", err.value);
    report.checks.push_back(std::move(check).finish());
  }
  return report;
}

SuiteReport verify_oracle(const Breakpoints& bp, const VerifyOptions& opts) {
  SuiteReport report{"oracle", {}};
  MinTracker agreement, kind_match, two_arc;
  MinTracker excluded[4];
  const RegionKind excluded_kinds[] = {RegionKind::FullCircle, RegionKind::Semicircle,
                                       RegionKind::ThreeQuarterCircle, RegionKind::NotchQuarterCircle};
  int mismatched_kind = 0;
  for (double av : stratified_notch_grid(opts.grid_a, bp)) {
    const NotchParam a(av);
    for (int k = 1; k <= opts.grid_t; ++k) {
      const double t = a.half_area() * k / opts.grid_t;
      const auto point = profile::f(a, t, bp);
      const auto per_kind = oracle::best_by_kind(a, t, opts.resolution, bp);
      double best = kInf;
      for (const auto& c : per_kind) best = std::min(best, c.perimeter);
      agreement.add(1e-9 - std::abs(best - point.perimeter));
      bool declared = false;
      for (const auto& c : per_kind) {
        if (c.perimeter <= best + 1e-9 && point.minimizers.contains(c.kind())) declared = true;
        for (int e = 0; e < 4; ++e) {
          if (c.kind() == excluded_kinds[e]) excluded[e].add(c.perimeter - point.perimeter);
        }
      }
      if (!declared) ++mismatched_kind;
    }
    two_arc.add(2.0 * (1.0 - av) - profile::f(a, a.half_area(), bp).perimeter);
  }
  kind_match.add(mismatched_kind == 0 ? 1.0 : -mismatched_kind);

  Check agree("oracle.agreement min over candidates = f_a(t) within 1e-9");
  agree.require("1e-9-|oracle-f|", agreement.value);
  agree.require("argmin kind declared", kind_match.value);
  report.checks.push_back(std::move(agree).finish());

  for (int e = 0; e < 4; ++e) {
    Check check("oracle.excluded " + std::string(geometry::to_string(excluded_kinds[e])) + " loses to f_a");
    // Kinds that never fit on the grid (e.g. three-quarter circles at tiny a) report +inf.
    check.require("min P-f", excluded[e].value);
    report.checks.push_back(std::move(check).finish());
  }

  Check two("oracle.two-arc unions cost >= 2(1-a) > max f_a");
  two.require("2(1-a)-max f", two_arc.value);
  report.checks.push_back(std::move(two).finish());
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  margin=" << fmt(c.margin) << "  ["
        << c.detail << "]\n";
  }
  const auto passed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return c.passed; });
  out << report.suite << ": " << passed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace isoprofile::verify
