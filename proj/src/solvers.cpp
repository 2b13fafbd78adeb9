#include "isoprofile/solvers.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace isoprofile::solvers {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaFloor = 1e-8;
constexpr double kSlack = geometry::kFeasibilitySlack;

std::string range_message(const char* what, double value, double lo, double hi) {
  std::ostringstream msg;
  msg.precision(15);
  msg << what << " = " << value << " outside [" << lo << ", " << hi << "]";
  return msg.str();
}

}  // namespace

void SolverConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(fd_step > 0.0) || max_iter < 1) {
    throw DomainError("solver tolerances must be positive and max_iter >= 1");
  }
}

double theta_max_residual(double theta) {
  const double s = std::sin(theta);
  return theta / (s * s) - std::cos(theta) / s - 1.0;
}

double solve_theta_max(const SolverConfig& cfg) {
  return find_root(theta_max_residual, 0.1, kPi / 2.0 - 0.01, cfg).root;
}

double t_of_theta_unit_perimeter(double theta) {
  if (!(theta > 0.0)) throw DomainError("t_of_theta_unit_perimeter needs theta > 0");
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return (-2.0 * s * s + (2.0 * theta - c) * s + theta) / (2.0 * theta * theta);
}

double theta_of_area(const NotchParam& a, double t, double theta_max, const SolverConfig& cfg) {
  const double lo_area = a.notch_strip_area();
  const double hi_area = a.half_area();
  if (!(t >= lo_area - kSlack && t <= hi_area + kSlack)) {
    throw DomainError(range_message("S4 area t", t, lo_area, hi_area));
  }
  if (t <= lo_area) return 0.0;
  if (t >= hi_area) return theta_max;
  auto residual = [&](double theta) { return geometry::s4_area(a, theta, theta_max) - t; };
  return find_root(residual, 0.0, theta_max, cfg).root;
}

NotchAngle a_of_t(double t, const Breakpoints& bp) {
  if (!(t > 0.0) || t > bp.t0() + kSlack) {
    throw DomainError(range_message("unit-perimeter area t", t, 0.0, bp.t0()));
  }
  double theta = bp.theta_max();
  if (t < bp.t0()) {
    auto residual = [&](double th) { return t_of_theta_unit_perimeter(th) - t; };
    theta = find_root(residual, kThetaFloor, bp.theta_max(), bp.config()).root;
  }
  return {geometry::one_minus_sinc(theta), theta};
}

double tau(double a, const Breakpoints& bp) {
  if (!(a >= bp.alpha() - kSlack && a <= bp.beta() + kSlack)) {
    throw DomainError(range_message("tau: a", a, bp.alpha(), bp.beta()));
  }
  // P(S4) = 1 exactly when a = 1 - sin(theta)/theta, which is increasing in theta.
  auto residual = [&](double th) { return geometry::one_minus_sinc(th) - a; };
  double theta = bp.theta_max();
  if (a < bp.beta()) theta = find_root(residual, kThetaFloor, bp.theta_max(), bp.config()).root;
  return t_of_theta_unit_perimeter(theta);
}

double sigma_residual(const NotchParam& a, double theta, double theta_max) {
  const double p = geometry::s4_perimeter(a, theta, theta_max);
  return (p * p - kPi * geometry::s4_area(a, theta, theta_max)) / (1.0 - a.a());
}

double sigma_theta(double a, const Breakpoints& bp) {
  if (!(a >= bp.alpha() - kSlack && a <= bp.gamma() + kSlack)) {
    throw DomainError(range_message("sigma: a", a, bp.alpha(), bp.gamma()));
  }
  const NotchParam notch(a);
  auto j = [&](double theta) { return sigma_residual(notch, theta, bp.theta_max()); };
  // j(0) = 1 - (1+pi) a >= 0 on [alpha, gamma]; at a = gamma the root is theta = 0.
  if (j(0.0) <= 0.0) return 0.0;
  const double at_max = j(bp.theta_max());
  if (!(at_max < 0.0)) {
    std::ostringstream msg;
    msg << "sigma: j(theta_max) = " << at_max << " is not negative at a = " << a;
    throw SolverError(msg.str());
  }
  return find_root(j, 0.0, bp.theta_max(), bp.config()).root;
}

double sigma(double a, const Breakpoints& bp) {
  const double theta = sigma_theta(a, bp);
  return geometry::s4_area(NotchParam(a), theta, bp.theta_max());
}

double transition_T(double a, const Breakpoints& bp) {
  static_cast<void>(NotchParam{a});  // validates 0 <= a < 1
  if (a <= bp.alpha()) return 1.0 / kPi;
  if (a <= bp.gamma()) return sigma(a, bp);
  return (1.0 - a) * (1.0 - a) / kPi;
}

Breakpoints Breakpoints::compute(const SolverConfig& cfg) {
  cfg.validate();
  Breakpoints bp;
  bp.cfg_ = cfg;
  bp.theta_max_ = solve_theta_max(cfg);
  bp.t0_ = t_of_theta_unit_perimeter(bp.theta_max_);
  bp.beta_ = geometry::one_minus_sinc(bp.theta_max_);
  bp.gamma_ = 1.0 / (1.0 + kPi);
  bp.alpha_ = a_of_t(1.0 / kPi, bp).a;

  if (!(0.0 < bp.alpha_ && bp.alpha_ < bp.beta_ && bp.beta_ < bp.gamma_ && bp.gamma_ < 1.0)) {
    throw SolverError("breakpoints out of order: expected 0 < alpha < beta < gamma < 1");
  }
  // The middle branch of the alpha <= a <= beta regime needs tau(a) >= sigma(a).
  constexpr int kChecks = 16;
  for (int i = 0; i <= kChecks; ++i) {
    const double a = bp.alpha_ + (bp.beta_ - bp.alpha_) * i / kChecks;
    const double s = bp.sigma(a);
    const double t = bp.tau(a);
    if (t < s - 1e-9) {
      std::ostringstream msg;
      msg.precision(15);
      msg << "tau(" << a << ") = " << t << " < sigma = " << s;
      throw SolverError(msg.str());
    }
  }
  return bp;
}

}  // namespace isoprofile::solvers
