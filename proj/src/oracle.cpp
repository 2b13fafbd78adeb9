#include "isoprofile/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "isoprofile/errors.hpp"

namespace isoprofile::oracle {

namespace {

using geometry::CornerArc;
using geometry::OracleArc;
using geometry::QuarterDisk;
using geometry::RegionUnion;
using geometry::ShortChord;
using geometry::UnitChord;

constexpr double kPi = std::numbers::pi;

constexpr RegionKind kKindOrder[] = {RegionKind::S1,
                                     RegionKind::S2,
                                     RegionKind::S3,
                                     RegionKind::S4,
                                     RegionKind::FullCircle,
                                     RegionKind::Semicircle,
                                     RegionKind::ThreeQuarterCircle,
                                     RegionKind::NotchQuarterCircle,
                                     RegionKind::Union};

constexpr RegionKind kOracleArcs[] = {RegionKind::FullCircle, RegionKind::Semicircle,
                                      RegionKind::ThreeQuarterCircle, RegionKind::NotchQuarterCircle};

void check_inputs(const NotchParam& a, double t, int resolution) {
  if (!(t > 0.0) || t > a.half_area() + geometry::kFeasibilitySlack) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "oracle area t = " << t << " outside (0, " << a.half_area() << "]";
    throw DomainError(msg.str());
  }
  if (resolution < 10) throw DomainError("oracle resolution must be >= 10");
}

void push_if_feasible(std::vector<Candidate>& out, const NotchParam& a, CandidateRegion region,
                      const Breakpoints& bp) {
  if (!geometry::feasible(a, region, bp.theta_max())) return;
  const auto ap = geometry::region_area_perimeter(a, region, bp.theta_max());
  out.push_back({std::move(region), ap.area, ap.perimeter});
}

Candidate make_union(const Candidate& first, const Candidate& second) {
  CandidateRegion u{RegionUnion{{first.region, second.region}}};
  return {std::move(u), first.area + second.area, first.perimeter + second.perimeter};
}

const Candidate& cheapest(const std::vector<Candidate>& list) {
  return *std::min_element(list.begin(), list.end(),
                           [](const Candidate& x, const Candidate& y) { return x.perimeter < y.perimeter; });
}

double split_area(double t, int k, int resolution) { return t * k / (resolution + 1); }

}  // namespace

std::vector<Candidate> connected_candidates(const NotchParam& a, double t, const Breakpoints& bp) {
  std::vector<Candidate> out;
  if (!(t > 0.0)) return out;
  const double av = a.a();

  if (geometry::kind_feasible_at_area(a, RegionKind::S1, t)) {
    const double r = geometry::radius_for_area(a, RegionKind::S1, t);
    for (auto corner : geometry::kAllCorners) {
      // At a = 0 the two notch corners are the same point.
      if (av == 0.0 && corner == geometry::Corner::NotchLeft) continue;
      push_if_feasible(out, a, {QuarterDisk{r, corner}}, bp);
    }
  }
  if (geometry::kind_feasible_at_area(a, RegionKind::S2, t)) {
    push_if_feasible(out, a, {UnitChord{t}}, bp);
  }
  if (geometry::kind_feasible_at_area(a, RegionKind::S3, t)) {
    push_if_feasible(out, a, {ShortChord{t / (1.0 - av)}}, bp);
  }
  if (geometry::kind_feasible_at_area(a, RegionKind::S4, t)) {
    const double theta = bp.theta_of_area(a, t);
    push_if_feasible(out, a, {CornerArc{theta, false}}, bp);
    push_if_feasible(out, a, {CornerArc{theta, true}}, bp);
  }
  for (RegionKind kind : kOracleArcs) {
    if (!geometry::kind_feasible_at_area(a, kind, t)) continue;
    push_if_feasible(out, a, {OracleArc{kind, geometry::radius_for_area(a, kind, t)}}, bp);
  }
  return out;
}

std::vector<Candidate> enumerate_candidates(const NotchParam& a, double t, int resolution,
                                            const Breakpoints& bp) {
  check_inputs(a, t, resolution);
  std::vector<Candidate> out = connected_candidates(a, t, bp);
  for (int k = 1; k <= resolution; ++k) {
    const double t1 = split_area(t, k, resolution);
    const auto first = connected_candidates(a, t1, bp);
    const auto second = connected_candidates(a, t - t1, bp);
    for (const auto& p : first) {
      for (const auto& q : second) out.push_back(make_union(p, q));
    }
  }
  return out;
}

std::vector<Candidate> best_by_kind(const NotchParam& a, double t, int resolution, const Breakpoints& bp) {
  check_inputs(a, t, resolution);
  std::vector<std::optional<Candidate>> best(std::size(kKindOrder));
  auto slot = [](RegionKind kind) {
    return static_cast<std::size_t>(std::find(std::begin(kKindOrder), std::end(kKindOrder), kind) -
                                    std::begin(kKindOrder));
  };
  auto offer = [&](const Candidate& c) {
    auto& current = best[slot(c.kind())];
    if (!current || c.perimeter < current->perimeter) current = c;
  };

  for (const auto& c : connected_candidates(a, t, bp)) offer(c);
  for (int k = 1; k <= resolution; ++k) {
    const double t1 = split_area(t, k, resolution);
    const auto first = connected_candidates(a, t1, bp);
    const auto second = connected_candidates(a, t - t1, bp);
    if (first.empty() || second.empty()) continue;
    offer(make_union(cheapest(first), cheapest(second)));
  }

  std::vector<Candidate> out;
  for (auto& entry : best) {
    if (entry) out.push_back(std::move(*entry));
  }
  return out;
}

OracleMin oracle_min(const NotchParam& a, double t, int resolution, const Breakpoints& bp) {
  const auto per_kind = best_by_kind(a, t, resolution, bp);
  if (per_kind.empty()) throw SolverError("oracle found no feasible candidate");
  const Candidate& winner = cheapest(per_kind);
  return {winner.perimeter, winner.region};
}

SecondCaseBound secondcase_bound(double theta) {
  if (!(theta >= kPi / 2.0 && theta <= kPi)) {
    std::ostringstream msg;
    msg << "secondcase_bound: theta = " << theta << " outside [pi/2, pi]";
    throw DomainError(msg.str());
  }
  const double t = 0.5 * theta - 0.5 * std::cos(theta) * std::sin(theta);
  return {theta * theta, kPi * t};
}

}  // namespace isoprofile::oracle
