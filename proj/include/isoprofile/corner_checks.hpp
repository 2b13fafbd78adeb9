#pragma once

// Numeric checks of the corner-avoiding deformation.
//
// Coordinates: corner K at the origin, wall along the positive x-axis, the
// boundary segment KP at angle theta with P = (l cos(theta), l sin(theta)).
// The deformed boundary leaves the wall at A = (eps, 0), rises vertically to
// B = (eps, eps tan(theta) + w) and then runs straight to P. C is where AB
// crosses KP. w is chosen so that triangles ACK and BCP have equal area,
// which keeps the enclosed area unchanged.

#include "isoprofile/root_finding.hpp"

namespace isoprofile::corner {

struct Point {
  double x;
  double y;
};

struct CornerDeformation {
  double theta;
  double ell;
  double epsilon;
  double width;  // w = eps^2 tan(theta) / (l cos(theta) - eps)

  Point k() const { return {0.0, 0.0}; }
  Point a() const;
  Point b() const;
  Point c() const;
  Point p() const;
};

/// Requires 0 < theta < pi/2, l > 0 and 0 <= eps < l cos(theta).
CornerDeformation make_deformation(double theta, double ell, double epsilon);

double deformation_width(double theta, double ell, double epsilon);

/// Right side minus left side of 2 eps^2 tan(theta) < eps (l - eps sec(theta)) (1 - sin(theta)).
double lower_perim2_margin(double theta, double ell, double epsilon);

/// True iff the inequality above holds; it then implies the polyline is shorter.
bool strict_improvement(double theta, double ell, double epsilon);

/// |KP| - (|AB| + |BP|) from explicit coordinates.
double polyline_perimeter_gain(double theta, double ell, double epsilon);

/// Largest eps below which strict_improvement holds, by bisection on
/// (0, l cos(theta)).
double improvement_threshold(double theta, double ell, const solvers::SolverConfig& cfg = {});

/// lambda (1 - sin(theta1)) - lambda^2 sec(theta1) (1 + sin(theta1)).
double arc_rhs(double theta1, double lambda);

/// (1 - sin(theta1)) cos(theta1) / (1 + sin(theta1)); arc_rhs > 0 for lambda below it.
double arc_lambda_bound(double theta1);

/// Circular-arc version: the boundary near K is an arc of radius `radius`
/// whose secant KP has length l. True iff arc_rhs(theta1, lambda) exceeds
/// delta / l^2, with delta the exact area between arc and secant.
/// Requires 0 <= theta < theta1 < pi/2, 0 < l <= 2 radius, lambda in (0,1).
bool arc_improvement(double theta, double theta1, double ell, double lambda, double radius = 1.0);

/// arc_rhs(theta1, lambda) - delta(l) / l^2.
double arc_improvement_margin(double theta, double theta1, double ell, double lambda, double radius = 1.0);

}  // namespace isoprofile::corner
