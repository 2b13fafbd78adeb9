#include "isoprofile/corner_checks.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "isoprofile/errors.hpp"
#include "isoprofile/geometry.hpp"

namespace isoprofile::corner {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_segment_domain(double theta, double ell, double epsilon) {
  std::ostringstream msg;
  if (!(theta > 0.0 && theta < kHalfPi)) {
    msg << "corner angle theta = " << theta << " outside (0, pi/2)";
  } else if (!(ell > 0.0)) {
    msg << "segment length must be positive, got " << ell;
  } else if (!(epsilon >= 0.0) || epsilon >= ell * std::cos(theta)) {
    msg << "retreat eps = " << epsilon << " outside [0, l cos(theta) = " << ell * std::cos(theta) << ")";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

double distance(Point u, Point v) { return std::hypot(u.x - v.x, u.y - v.y); }

}  // namespace

Point CornerDeformation::a() const { return {epsilon, 0.0}; }
Point CornerDeformation::b() const { return {epsilon, epsilon * std::tan(theta) + width}; }
Point CornerDeformation::c() const { return {epsilon, epsilon * std::tan(theta)}; }
Point CornerDeformation::p() const { return {ell * std::cos(theta), ell * std::sin(theta)}; }

double deformation_width(double theta, double ell, double epsilon) {
  check_segment_domain(theta, ell, epsilon);
  return epsilon * epsilon * std::tan(theta) / (ell * std::cos(theta) - epsilon);
}

CornerDeformation make_deformation(double theta, double ell, double epsilon) {
  return {theta, ell, epsilon, deformation_width(theta, ell, epsilon)};
}

double lower_perim2_margin(double theta, double ell, double epsilon) {
  check_segment_domain(theta, ell, epsilon);
  const double lhs = 2.0 * epsilon * epsilon * std::tan(theta);
  const double rhs = epsilon * (ell - epsilon / std::cos(theta)) * (1.0 - std::sin(theta));
  return rhs - lhs;
}

bool strict_improvement(double theta, double ell, double epsilon) {
  return lower_perim2_margin(theta, ell, epsilon) > 0.0;
}

double polyline_perimeter_gain(double theta, double ell, double epsilon) {
  const CornerDeformation d = make_deformation(theta, ell, epsilon);
  return distance(d.k(), d.p()) - (distance(d.a(), d.b()) + distance(d.b(), d.p()));
}

double improvement_threshold(double theta, double ell, const solvers::SolverConfig& cfg) {
  check_segment_domain(theta, ell, 0.0);
  // margin / eps = (l - eps sec) (1 - sin) - 2 eps tan is linear and decreasing in eps,
  // positive at 0 and negative at l cos(theta).
  auto per_eps = [&](double eps) {
    return (ell - eps / std::cos(theta)) * (1.0 - std::sin(theta)) - 2.0 * eps * std::tan(theta);
  };
  return solvers::find_root(per_eps, 0.0, ell * std::cos(theta), cfg).root;
}

double arc_rhs(double theta1, double lambda) {
  return lambda * (1.0 - std::sin(theta1)) - lambda * lambda / std::cos(theta1) * (1.0 + std::sin(theta1));
}

double arc_lambda_bound(double theta1) {
  return (1.0 - std::sin(theta1)) * std::cos(theta1) / (1.0 + std::sin(theta1));
}

double arc_improvement_margin(double theta, double theta1, double ell, double lambda, double radius) {
  std::ostringstream msg;
  if (!(theta >= 0.0 && theta < theta1 && theta1 < kHalfPi)) {
    msg << "need 0 <= theta < theta1 < pi/2, got theta = " << theta << ", theta1 = " << theta1;
  } else if (!(ell > 0.0)) {
    msg << "secant length must be positive, got " << ell;
  } else if (!(lambda > 0.0 && lambda < 1.0)) {
    msg << "lambda = " << lambda << " outside (0, 1)";
  }
  if (!msg.str().empty()) throw DomainError(msg.str());
  // The +delta sign is the unfavourable one.
  const double delta = geometry::circular_segment_area(radius, ell);
  return arc_rhs(theta1, lambda) - delta / (ell * ell);
}

bool arc_improvement(double theta, double theta1, double ell, double lambda, double radius) {
  return arc_improvement_margin(theta, theta1, ell, lambda, radius) > 0.0;
}

}  // namespace isoprofile::corner
