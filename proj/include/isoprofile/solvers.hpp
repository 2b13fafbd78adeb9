#pragma once

// Implicit constants of the notched-square profile.
//
//   theta_max  root of theta/sin^2(theta) - cot(theta) = 1; the S4 angle that
//              encloses half of Q_a, independent of a
//   t0         area of the unit-perimeter S4 region at theta_max
//   alpha      a(1/pi), where a(t) is the notch size whose unit-perimeter S4
//              region has area t
//   beta       a(t0) = 1 - sin(theta_max)/theta_max
//   gamma      1/(1+pi)
//   sigma(a)   area where P(S4) = sqrt(pi |S4|),   a in [alpha, gamma]
//   tau(a)     area where P(S4) = 1,               a in [alpha, beta]
//   T(a)       area where the profile leaves sqrt(pi t)

#include "isoprofile/geometry.hpp"
#include "isoprofile/root_finding.hpp"

namespace isoprofile::solvers {

using geometry::NotchParam;

/// Residual theta/sin^2(theta) - cot(theta) - 1.
double theta_max_residual(double theta);

double solve_theta_max(const SolverConfig& cfg = {});

/// Area of the S4 region with unit perimeter at angle theta, i.e. with
/// a = 1 - sin(theta)/theta. Strictly increasing on (0, theta_max].
double t_of_theta_unit_perimeter(double theta);

/// Unique theta in [0, theta_max] with s4_area(a, theta) = t.
double theta_of_area(const NotchParam& a, double t, double theta_max, const SolverConfig& cfg = {});

class Breakpoints;

struct NotchAngle {
  double a;
  double theta;
};

/// The (a, theta) pair whose S4 region has area t and perimeter 1; 0 < t <= t0.
NotchAngle a_of_t(double t, const Breakpoints& bp);

double tau(double a, const Breakpoints& bp);

/// j(theta) = (P^2(S4) - pi |S4|) / (1 - a); its root on [0, theta_max] gives sigma(a).
double sigma_residual(const NotchParam& a, double theta, double theta_max);

double sigma(double a, const Breakpoints& bp);

/// Angle of the S4 region realizing sigma(a).
double sigma_theta(double a, const Breakpoints& bp);

double transition_T(double a, const Breakpoints& bp);

/// Cached constants; immutable once built, safe to share between threads.
class Breakpoints {
 public:
  /// Solves every constant and checks tau(a) >= sigma(a) on [alpha, beta].
  static Breakpoints compute(const SolverConfig& cfg = {});

  double theta_max() const { return theta_max_; }
  double t0() const { return t0_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  const SolverConfig& config() const { return cfg_; }

  double sigma(double a) const { return solvers::sigma(a, *this); }
  double tau(double a) const { return solvers::tau(a, *this); }
  double transition(double a) const { return transition_T(a, *this); }
  double theta_of_area(const NotchParam& a, double t) const {
    return solvers::theta_of_area(a, t, theta_max_, cfg_);
  }

 private:
  Breakpoints() = default;

  SolverConfig cfg_;
  double theta_max_ = 0.0;
  double t0_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double gamma_ = 0.0;
};

}  // namespace isoprofile::solvers
