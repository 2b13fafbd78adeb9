// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "isoprofile/corner_checks.hpp"
#include "isoprofile/geometry.hpp"
#include "isoprofile/oracle.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/solvers.hpp"
#include "isoprofile/verify.hpp"

using namespace isoprofile;
using geometry::NotchParam;
using solvers::Breakpoints;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome constants(const Breakpoints& bp) {
  const double errs[] = {std::abs(bp.theta_max() - 1.21), std::abs(bp.t0() - 0.48), std::abs(bp.alpha() - 0.10),
                         std::abs(bp.beta() - 0.23)};
  const double gamma_err = std::abs(bp.gamma() - 1.0 / (1.0 + kPi));
  const bool ok = std::all_of(std::begin(errs), std::end(errs), [](double e) { return e <= 0.01; }) &&
                  gamma_err <= 1e-12;
  return {ok, "theta_max=" + std::to_string(bp.theta_max()) + " t0=" + std::to_string(bp.t0()) +
                  " alpha=" + std::to_string(bp.alpha()) + " beta=" + std::to_string(bp.beta()) +
                  " |gamma-1/(1+pi)|=" + sci(gamma_err)};
}

Outcome residuals(const Breakpoints& bp, std::mt19937_64& rng) {
  const double tm = bp.theta_max();
  const double r_theta = std::abs(solvers::theta_max_residual(tm));
  double r_sigma = 0.0;
  double r_tau = 0.0;
  std::uniform_real_distribution<double> in_ag(bp.alpha(), bp.gamma());
  std::uniform_real_distribution<double> in_ab(bp.alpha(), bp.beta());
  for (int i = 0; i < 20; ++i) {
    const double av = in_ag(rng);
    const NotchParam a(av);
    const double theta = solvers::sigma_theta(av, bp);
    const double p = geometry::s4_perimeter(a, theta, tm);
    const double area = geometry::s4_area(a, theta, tm);
    r_sigma = std::max({r_sigma, std::abs(p * p - kPi * area), std::abs(area - bp.sigma(av))});
  }
  for (int i = 0; i < 20; ++i) {
    const double av = in_ab(rng);
    const NotchParam a(av);
    r_tau = std::max(r_tau, std::abs(profile::s4_perimeter_at_area(a, bp.tau(av), bp) - 1.0));
  }
  return {r_theta <= 1e-12 && r_sigma <= 1e-10 && r_tau <= 1e-10,
          "theta_max " + sci(r_theta) + ", sigma " + sci(r_sigma) + ", tau " + sci(r_tau)};
}

Outcome endpoints(const Breakpoints& bp) {
  const double g = bp.gamma();
  const double e_alpha = std::abs(bp.sigma(bp.alpha()) - 1.0 / kPi);
  const double e_gamma = std::abs(bp.sigma(g) - (1.0 - g) * (1.0 - g) / kPi);
  return {e_alpha <= 1e-10 && e_gamma <= 1e-10, "sigma(alpha) " + sci(e_alpha) + ", sigma(gamma) " + sci(e_gamma)};
}

Outcome derivatives(const Breakpoints& bp) {
  double worst_rel = 0.0;
  double worst_second = std::numeric_limits<double>::infinity();
  const double h = 1e-6;
  for (double av : verify::stratified_notch_grid(20, bp)) {
    const NotchParam a(av);
    const double lo = a.notch_strip_area();
    const double hi = a.half_area();
    auto p = [&](double t) { return profile::s4_perimeter_at_area(a, t, bp); };
    for (int k = 1; k <= 100; ++k) {
      const double t = lo + (hi - lo) * k / 101.0;
      const double theta = bp.theta_of_area(a, t);
      const double exact = std::sin(theta) / (1.0 - av);
      worst_rel = std::max(worst_rel, std::abs((p(t + h) - p(t - h)) / (2 * h) - exact) / exact);
    }
    const double step = (hi - lo) / 200.0;
    for (int k = 1; k < 200; ++k) {
      const double t = lo + step * k;
      worst_second = std::min(worst_second, p(t - step) - 2 * p(t) + p(t + step));
    }
  }
  return {worst_rel <= 1e-6 && worst_second >= -1e-9,
          "max rel fd err " + sci(worst_rel) + ", min second difference " + sci(worst_second)};
}

Outcome bounds(const Breakpoints& bp, std::mt19937_64& rng) {
  double min_gap = std::numeric_limits<double>::infinity();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const NotchParam a(0.99 * unit(rng));
    const double t = a.notch_strip_area() + (a.half_area() - a.notch_strip_area()) * unit(rng);
    min_gap = std::min(min_gap, std::sqrt(2.0) * (1.0 - a.a()) - profile::s4_perimeter_at_area(a, t, bp));
  }
  double max_f = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const NotchParam a(bp.beta() * i / 40.0);
    for (int k = 1; k <= 200; ++k) max_f = std::max(max_f, profile::f(a, a.half_area() * k / 200.0, bp).perimeter);
  }
  return {min_gap > 0.0 && max_f <= 1.0, "min sqrt2(1-a)-P(S4) " + sci(min_gap) + ", max f_a (a<=beta) " +
                                             std::to_string(max_f)};
}

Outcome monotonicity(const Breakpoints& bp) {
  double sigma_step = std::numeric_limits<double>::infinity();
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 60; ++k) {
    const double s = bp.sigma(bp.alpha() + (bp.gamma() - bp.alpha()) * k / 59.0);
    sigma_step = std::min(sigma_step, previous - s);
    previous = s;
  }
  double a_step = std::numeric_limits<double>::infinity();
  previous = -1.0;
  for (int k = 1; k <= 60; ++k) {
    const double av = solvers::a_of_t(bp.t0() * k / 60.0, bp).a;
    a_step = std::min(a_step, av - previous);
    previous = av;
  }
  double f_step = std::numeric_limits<double>::infinity();
  for (double av : verify::stratified_notch_grid(20, bp)) {
    const NotchParam a(av);
    previous = 0.0;
    for (int k = 1; k <= 100; ++k) {
      const double v = profile::f(a, a.half_area() * k / 100.0, bp).perimeter;
      f_step = std::min(f_step, v - previous);
      previous = v;
    }
  }
  return {sigma_step > 0.0 && a_step > 0.0 && f_step >= 0.0,
          "min sigma decrement " + sci(sigma_step) + ", min a(t) increment " + sci(a_step) +
              ", min f_a increment " + sci(f_step)};
}

Outcome continuity(const Breakpoints& bp) {
  double worst = 0.0;
  int boundaries = 0;
  const auto grid = verify::stratified_notch_grid(50, bp);
  for (double av : grid) {
    const NotchParam a(av);
    const auto chain = profile::branches(a, bp);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const double t = chain[i].t_end;
      worst = std::max(worst, std::abs(profile::branch_perimeter(a, chain[i].kind, t, bp) -
                                       profile::branch_perimeter(a, chain[i + 1].kind, t, bp)));
      ++boundaries;
    }
  }
  return {grid.size() == 50 && worst < 1e-9,
          std::to_string(boundaries) + " boundaries over 50 notches, max jump " + sci(worst)};
}

Outcome from_suite(const verify::SuiteReport& report) {
  std::string detail;
  double worst = std::numeric_limits<double>::infinity();
  int passed = 0;
  for (const auto& c : report.checks) {
    worst = std::min(worst, c.margin);
    passed += c.passed;
    if (!c.passed) detail += " failed: " + c.name + ";";
  }
  return {report.all_passed(), std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
                                   " checks, min margin " + sci(worst) + detail};
}

Outcome square(const Breakpoints& bp) {
  const NotchParam a(0.0);
  double worst = 0.0;
  for (int k = 1; k <= 2000; ++k) {
    const double t = 0.5 * k / 2000.0;
    const double expected = t <= 1.0 / kPi ? std::sqrt(kPi * t) : 1.0;
    worst = std::max(worst, std::abs(profile::f(a, t, bp).perimeter - expected));
  }
  const double at_break = std::abs(profile::f(a, 1.0 / kPi, bp).perimeter - 1.0);
  worst = std::max(worst, at_break);
  return {worst <= 1e-12, "max |f_0 - square profile| " + sci(worst)};
}

}  // namespace

int main() {
  std::mt19937_64 rng(42);
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& criterion) {
    Outcome outcome{false, ""};
    try {
      outcome = criterion();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.passed;
    std::printf("%s  %2d. %s  (%s)\n", outcome.passed ? "PASS" : "FAIL", id, title, outcome.detail.c_str());
    std::fflush(stdout);
  };

  const Breakpoints bp = Breakpoints::compute();
  verify::VerifyOptions opts;
  opts.seed = 42;
  opts.grid_a = 20;
  opts.grid_t = 200;
  opts.resolution = 200;

  report(1, "constants", [&] { return constants(bp); });
  report(2, "residual certificates", [&] { return residuals(bp, rng); });
  report(3, "sigma endpoint identities", [&] { return endpoints(bp); });
  report(4, "derivative and convexity checks", [&] { return derivatives(bp); });
  report(5, "bound suite", [&] { return bounds(bp, rng); });
  report(6, "monotonicity suite", [&] { return monotonicity(bp); });
  report(7, "profile continuity", [&] { return continuity(bp); });
  report(8, "oracle equivalence on 20x200 grid", [&] { return from_suite(verify::verify_oracle(bp, opts)); });
  report(9, "corner deformation suite", [&] { return from_suite(verify::verify_section3(opts)); });
  report(10, "square regression", [&] { return square(bp); });
  return failures == 0 ? 0 : 1;
}
