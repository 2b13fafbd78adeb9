#include "isoprofile/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "isoprofile/errors.hpp"

namespace isoprofile::profile {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint8_t bit(RegionKind kind) {
  switch (kind) {
    case RegionKind::S1: return 1;
    case RegionKind::S2: return 2;
    case RegionKind::S3: return 4;
    case RegionKind::S4: return 8;
    default:
      throw DomainError("minimizer sets only hold S1..S4, got " + std::string(geometry::to_string(kind)));
  }
}

constexpr RegionKind kOrdered[] = {RegionKind::S1, RegionKind::S2, RegionKind::S3, RegionKind::S4};

double clamp_to_s4(const NotchParam& a, double t) {
  return std::clamp(t, a.notch_strip_area(), a.half_area());
}

}  // namespace

MinimizerSet::MinimizerSet(std::initializer_list<RegionKind> kinds) {
  for (RegionKind k : kinds) insert(k);
}

void MinimizerSet::insert(RegionKind kind) { bits_ |= bit(kind); }

bool MinimizerSet::contains(RegionKind kind) const {
  switch (kind) {
    case RegionKind::S1:
    case RegionKind::S2:
    case RegionKind::S3:
    case RegionKind::S4:
      return (bits_ & bit(kind)) != 0;
    default:
      return false;
  }
}

std::size_t MinimizerSet::size() const { return kinds().size(); }

std::vector<RegionKind> MinimizerSet::kinds() const {
  std::vector<RegionKind> out;
  for (RegionKind k : kOrdered) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::string MinimizerSet::to_string() const {
  std::string out;
  for (RegionKind k : kinds()) {
    if (!out.empty()) out += '+';
    out += geometry::to_string(k);
  }
  return out;
}

Regime regime_of(double a, const Breakpoints& bp) {
  if (a <= bp.alpha()) return Regime::SquareLike;
  if (a <= bp.beta()) return Regime::ArcThenChord;
  if (a <= bp.gamma()) return Regime::ArcOnly;
  return Regime::Notched;
}

std::vector<Branch> branches_for_regime(const NotchParam& a, Regime regime, const Breakpoints& bp) {
  const double half = a.half_area();
  const double av = a.a();
  switch (regime) {
    case Regime::SquareLike:
      return {{RegionKind::S1, 0.0, 1.0 / kPi}, {RegionKind::S2, 1.0 / kPi, half}};
    case Regime::ArcThenChord: {
      const double s = bp.sigma(av);
      const double t = bp.tau(av);
      return {{RegionKind::S1, 0.0, s}, {RegionKind::S4, s, t}, {RegionKind::S2, t, half}};
    }
    case Regime::ArcOnly: {
      const double s = bp.sigma(av);
      return {{RegionKind::S1, 0.0, s}, {RegionKind::S4, s, half}};
    }
    case Regime::Notched: {
      const double disk_end = (1.0 - av) * (1.0 - av) / kPi;
      const double strip_end = a.notch_strip_area();
      return {{RegionKind::S1, 0.0, disk_end},
              {RegionKind::S3, disk_end, strip_end},
              {RegionKind::S4, strip_end, half}};
    }
  }
  return {};
}

std::vector<Branch> branches(const NotchParam& a, const Breakpoints& bp) {
  return branches_for_regime(a, regime_of(a.a(), bp), bp);
}

double branch_perimeter(const NotchParam& a, RegionKind kind, double t, const Breakpoints& bp) {
  switch (kind) {
    case RegionKind::S1: return std::sqrt(kPi * t);
    case RegionKind::S2: return 1.0;
    case RegionKind::S3: return 1.0 - a.a();
    case RegionKind::S4: return s4_perimeter_at_area(a, t, bp);
    default: break;
  }
  throw DomainError("profile branches only use S1..S4");
}

double s4_perimeter_at_area(const NotchParam& a, double t, const Breakpoints& bp) {
  const double theta = bp.theta_of_area(a, clamp_to_s4(a, t));
  return geometry::s4_perimeter(a, theta, bp.theta_max());
}

ProfilePoint f_in_regime(const NotchParam& a, double t, Regime regime, const Breakpoints& bp) {
  const double half = a.half_area();
  if (!(t > 0.0) || t > half + kBoundarySlack) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "profile area t = " << t << " outside (0, " << half << "]";
    throw DomainError(msg.str());
  }
  ProfilePoint point{a.a(), t, 0.0, {}, std::nullopt};
  bool have_value = false;
  for (const Branch& b : branches_for_regime(a, regime, bp)) {
    if (t < b.t_begin - kBoundarySlack || t > b.t_end + kBoundarySlack) continue;
    point.minimizers.insert(b.kind);
    if (!have_value) {
      point.perimeter = branch_perimeter(a, b.kind, t, bp);
      have_value = true;
    }
  }
  if (point.minimizers.contains(RegionKind::S4)) {
    point.theta = bp.theta_of_area(a, clamp_to_s4(a, t));
  }
  return point;
}

ProfilePoint f(const NotchParam& a, double t, const Breakpoints& bp) {
  return f_in_regime(a, t, regime_of(a.a(), bp), bp);
}

double dP_dt(const NotchParam& a, double t, const Breakpoints& bp) {
  bool on_arc = false;
  for (const Branch& b : branches(a, bp)) {
    if (b.kind == RegionKind::S4 && t >= b.t_begin - kBoundarySlack && t <= b.t_end + kBoundarySlack) {
      on_arc = true;
    }
  }
  if (!on_arc) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "t = " << t << " is not on the S4 branch of f_a for a = " << a.a();
    throw BranchError(msg.str());
  }
  const double theta = bp.theta_of_area(a, clamp_to_s4(a, t));
  return std::sin(theta) / (1.0 - a.a());
}

Domination sqrt_pi_dominates(const NotchParam& a, double t, const Breakpoints& bp) {
  const double width = 1.0 - a.a();
  const double upper = std::min({kPi / 4.0, kPi * width * width / 2.0, a.half_area()});
  if (!(t >= 0.0) || t > upper + kBoundarySlack) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "t = " << t << " outside [0, " << upper << "]";
    throw DomainError(msg.str());
  }
  if (t == 0.0) return {true, false, 0.0};
  const double margin = std::sqrt(kPi * t) - f(a, std::min(t, a.half_area()), bp).perimeter;
  return {margin >= -kBoundarySlack, margin > kBoundarySlack, margin};
}

}  // namespace isoprofile::profile
