#pragma once

// Bracketed scalar root finding: regula falsi steps (Illinois variant) inside
// a bracket that is always maintained, with a bisection fallback whenever the
// secant step stalls. Needs only a sign change, no derivatives.

#include <cmath>
#include <sstream>
#include <utility>

#include "isoprofile/errors.hpp"

namespace isoprofile::solvers {

struct SolverConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_iter = 200;
  double fd_step = 1e-6;

  /// Throws DomainError unless all tolerances are positive and max_iter >= 1.
  void validate() const;
};

struct RootResult {
  double root;
  double residual;
  int iterations;
};

template <class F>
RootResult find_root(F&& f, double lo, double hi, const SolverConfig& cfg = {}) {
  cfg.validate();
  if (!(lo <= hi)) std::swap(lo, hi);
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || std::signbit(f_lo) == std::signbit(f_hi)) {
    std::ostringstream msg;
    msg << "no sign change on bracket [" << lo << ", " << hi << "]: f = (" << f_lo << ", " << f_hi << ")";
    throw SolverError(msg.str());
  }

  // Secant weights; the Illinois step halves the weight of a stale endpoint.
  double w_lo = f_lo;
  double w_hi = f_hi;
  // Side (-1 lo, +1 hi) that was retained in the previous step.
  int retained = 0;
  double previous_width = hi - lo;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    const double width = hi - lo;
    double x = lo - w_lo * width / (w_hi - w_lo);
    // Fall back to bisection when the secant point leaves the open bracket or
    // the last step failed to halve the bracket.
    if (!(x > lo && x < hi) || width > 0.5 * previous_width) {
      x = 0.5 * (lo + hi);
    }
    previous_width = width;
    const double fx = f(x);
    if (fx == 0.0) return {x, 0.0, iter};
    if (std::signbit(fx) == std::signbit(f_lo)) {
      lo = x;
      f_lo = w_lo = fx;
      if (retained == 1) w_hi *= 0.5;
      retained = 1;
    } else {
      hi = x;
      f_hi = w_hi = fx;
      if (retained == -1) w_lo *= 0.5;
      retained = -1;
    }
    const double tol = cfg.abs_tol + cfg.rel_tol * std::abs(x);
    if (hi - lo <= tol) {
      return std::abs(f_lo) <= std::abs(f_hi) ? RootResult{lo, f_lo, iter} : RootResult{hi, f_hi, iter};
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      // Adjacent doubles: nothing left to split.
      return std::abs(f_lo) <= std::abs(f_hi) ? RootResult{lo, f_lo, iter} : RootResult{hi, f_hi, iter};
    }
  }
  std::ostringstream msg;
  msg << "root finder did not converge in " << cfg.max_iter << " iterations on [" << lo << ", " << hi << "]";
  throw SolverError(msg.str());
}

}  // namespace isoprofile::solvers
