#pragma once

// The piecewise relative isoperimetric profile f_a(t) of Q_a, for
// 0 < t <= (1-a^2)/2, together with the region kinds that attain it.
//
// Four regimes in a, each a chain of branches in t:
//
//   0 <= a <= alpha       S1 sqrt(pi t)  | S2 1
//   alpha <= a <= beta    S1 sqrt(pi t)  | S4 P(S4) | S2 1
//   beta <= a <= gamma    S1 sqrt(pi t)  | S4 P(S4)
//   gamma <= a < 1        S1 sqrt(pi t)  | S3 1-a   | S4 P(S4)
//
// with break areas 1/pi, sigma(a), tau(a), (1-a)^2/pi and a(1-a). At
// a = alpha, beta, gamma the lower regime's chain is used.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "isoprofile/geometry.hpp"
#include "isoprofile/solvers.hpp"

namespace isoprofile::profile {

using geometry::NotchParam;
using geometry::RegionKind;
using solvers::Breakpoints;

/// Absolute slack in t for deciding that t sits on a branch boundary.
inline constexpr double kBoundarySlack = 1e-12;

/// Subset of {S1, S2, S3, S4}.
class MinimizerSet {
 public:
  MinimizerSet() = default;
  MinimizerSet(std::initializer_list<RegionKind> kinds);

  void insert(RegionKind kind);
  bool contains(RegionKind kind) const;
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::vector<RegionKind> kinds() const;
  /// Kind names joined by '+', in S1..S4 order, e.g. "S3+S4".
  std::string to_string() const;

  friend bool operator==(const MinimizerSet&, const MinimizerSet&) = default;

 private:
  std::uint8_t bits_ = 0;
};

enum class Regime { SquareLike, ArcThenChord, ArcOnly, Notched };

Regime regime_of(double a, const Breakpoints& bp);

struct Branch {
  RegionKind kind;
  double t_begin;
  double t_end;
};

/// The ordered branches of f_a covering (0, (1-a^2)/2].
std::vector<Branch> branches(const NotchParam& a, const Breakpoints& bp);

/// Same chain, but built from the formulas of an explicitly chosen regime.
/// Used to check that neighbouring regimes agree at a = alpha, beta, gamma.
std::vector<Branch> branches_for_regime(const NotchParam& a, Regime regime, const Breakpoints& bp);

struct ProfilePoint {
  double a;
  double t;
  double perimeter;
  MinimizerSet minimizers;
  std::optional<double> theta;  // present iff S4 is a minimizer
};

ProfilePoint f(const NotchParam& a, double t, const Breakpoints& bp);

/// f evaluated with a fixed regime's chain (see branches_for_regime).
ProfilePoint f_in_regime(const NotchParam& a, double t, Regime regime, const Breakpoints& bp);

/// Value of a single branch formula at t (S1: sqrt(pi t), S2: 1, S3: 1-a, S4: P(S4(t))).
double branch_perimeter(const NotchParam& a, RegionKind kind, double t, const Breakpoints& bp);

/// Perimeter of the arc branch, (1-a) theta(t) / sin theta(t), for any S4 area t.
double s4_perimeter_at_area(const NotchParam& a, double t, const Breakpoints& bp);

/// d/dt P(S4(t)) = sin(theta(t)) / (1-a). Throws BranchError off the S4 branch.
double dP_dt(const NotchParam& a, double t, const Breakpoints& bp);

struct Domination {
  bool holds;   // sqrt(pi t) >= f_a(t)
  bool strict;  // sqrt(pi t) > f_a(t)
  double margin;
};

/// Compares sqrt(pi t) against f_a(t) for t in [0, min{pi/4, pi(1-a)^2/2}]
/// (and inside the profile's domain).
Domination sqrt_pi_dominates(const NotchParam& a, double t, const Breakpoints& bp);

}  // namespace isoprofile::profile
