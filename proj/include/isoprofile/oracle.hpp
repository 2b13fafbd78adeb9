#pragma once

// Brute-force cross-check of the profile: enumerate every candidate region of
// a given area from the full taxonomy (including the kinds the minimizer
// search rules out, and two-part disjoint unions) and take the smallest
// relative perimeter. Uses geometry and the S4 angle inversion only; never
// the profile's branch logic.

#include <vector>

#include "isoprofile/geometry.hpp"
#include "isoprofile/solvers.hpp"

namespace isoprofile::oracle {

using geometry::CandidateRegion;
using geometry::NotchParam;
using geometry::RegionKind;
using solvers::Breakpoints;

struct Candidate {
  CandidateRegion region;
  double area;
  double perimeter;

  RegionKind kind() const { return region.kind(); }
};

/// Every feasible connected candidate with area exactly t: S1 at each convex
/// corner, S2, S3, S4 (both walls), the notch-surrounding quarter circle and
/// the full, semi and three-quarter circles.
std::vector<Candidate> connected_candidates(const NotchParam& a, double t, const Breakpoints& bp);

/// Connected candidates plus two-part unions over `resolution` uniform area
/// splits t = t1 + t2 (t1 = t k/(resolution+1), k = 1..resolution), every
/// pairing of feasible parts. Requires 0 < t <= (1-a^2)/2 and resolution >= 10.
std::vector<Candidate> enumerate_candidates(const NotchParam& a, double t, int resolution,
                                            const Breakpoints& bp);

struct OracleMin {
  double perimeter;
  CandidateRegion region;
};

/// Minimum over enumerate_candidates without materializing the union list.
OracleMin oracle_min(const NotchParam& a, double t, int resolution, const Breakpoints& bp);

/// Smallest perimeter reached by each kind (unions reported as one kind),
/// ordered S1, S2, S3, S4, full, semi, three-quarter, notch-quarter, union.
std::vector<Candidate> best_by_kind(const NotchParam& a, double t, int resolution, const Breakpoints& bp);

struct SecondCaseBound {
  double lhs;  // P^2
  double rhs;  // pi t
};

/// Unit-radius circular segment with central angle theta in [pi/2, pi]:
/// P = theta, t = (theta - cos(theta) sin(theta)) / 2.
SecondCaseBound secondcase_bound(double theta);

}  // namespace isoprofile::oracle
