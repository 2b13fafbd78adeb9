#include "isoprofile/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "isoprofile/errors.hpp"

namespace isoprofile::geometry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesCutoff = 0.1;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_theta(double theta, double theta_max) {
  if (!(theta >= 0.0) || theta > theta_max + kFeasibilitySlack) {
    std::ostringstream msg;
    msg << "arc angle " << theta << " outside [0, " << theta_max << "]";
    throw DomainError(msg.str());
  }
}

bool within(double value, double lo, double hi) {
  return value >= lo - kFeasibilitySlack && value <= hi + kFeasibilitySlack;
}

}  // namespace

NotchParam::NotchParam(double a) : a_(a) {
  if (!(a >= 0.0 && a < 1.0)) {
    std::ostringstream msg;
    msg << "notch size a = " << a << " outside [0, 1)";
    throw DomainError(msg.str());
  }
}

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::S1: return "S1";
    case RegionKind::S2: return "S2";
    case RegionKind::S3: return "S3";
    case RegionKind::S4: return "S4";
    case RegionKind::FullCircle: return "full-circle";
    case RegionKind::Semicircle: return "semicircle";
    case RegionKind::ThreeQuarterCircle: return "three-quarter-circle";
    case RegionKind::NotchQuarterCircle: return "notch-quarter-circle";
    case RegionKind::Union: return "union";
  }
  return "?";
}

std::string_view to_string(Corner corner) {
  switch (corner) {
    case Corner::TopRight: return "(1,1)";
    case Corner::BottomRight: return "(1,0)";
    case Corner::TopLeft: return "(0,1)";
    case Corner::NotchBottom: return "(a,0)";
    case Corner::NotchLeft: return "(0,a)";
  }
  return "?";
}

RegionKind CandidateRegion::kind() const {
  return std::visit(Overloaded{
                        [](const QuarterDisk&) { return RegionKind::S1; },
                        [](const UnitChord&) { return RegionKind::S2; },
                        [](const ShortChord&) { return RegionKind::S3; },
                        [](const CornerArc&) { return RegionKind::S4; },
                        [](const OracleArc& arc) { return arc.kind; },
                        [](const RegionUnion&) { return RegionKind::Union; },
                    },
                    shape);
}

std::string CandidateRegion::describe() const {
  std::ostringstream out;
  out.precision(6);
  std::visit(Overloaded{
                 [&](const QuarterDisk& q) {
                   out << "S1(corner=" << to_string(q.corner) << ", r=" << q.radius << ")";
                 },
                 [&](const UnitChord& c) { out << "S2(offset=" << c.offset << ")"; },
                 [&](const ShortChord& c) { out << "S3(offset=" << c.offset << ")"; },
                 [&](const CornerArc& arc) {
                   out << "S4(theta=" << arc.theta << (arc.reflected ? ", reflected" : "") << ")";
                 },
                 [&](const OracleArc& arc) { out << to_string(arc.kind) << "(r=" << arc.radius << ")"; },
                 [&](const RegionUnion& u) {
                   out << "union[";
                   for (std::size_t i = 0; i < u.parts.size(); ++i) {
                     out << (i ? " + " : "") << u.parts[i].describe();
                   }
                   out << "]";
                 },
             },
             shape);
  return out.str();
}

double theta_minus_sin_cos(double theta) {
  if (std::abs(theta) >= kSeriesCutoff) {
    return theta - std::sin(theta) * std::cos(theta);
  }
  // (x - sin x) / 2 with x = 2 theta
  const double x = 2.0 * theta;
  const double x2 = x * x;
  const double series =
      x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0 * (1.0 - x2 / 110.0))));
  return 0.5 * series;
}

double one_minus_sinc(double theta) {
  if (std::abs(theta) >= kSeriesCutoff) {
    return 1.0 - std::sin(theta) / theta;
  }
  const double t2 = theta * theta;
  return t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0 * (1.0 - t2 / 110.0))));
}

double s4_perimeter(const NotchParam& a, double theta, double theta_max) {
  check_theta(theta, theta_max);
  const double width = 1.0 - a.a();
  if (theta == 0.0) return width;
  return width * theta / std::sin(theta);
}

double s4_area(const NotchParam& a, double theta, double theta_max) {
  check_theta(theta, theta_max);
  const double width = 1.0 - a.a();
  if (theta == 0.0) return a.notch_strip_area();
  const double s = std::sin(theta);
  return width * width * theta_minus_sin_cos(theta) / (2.0 * s * s) + a.notch_strip_area();
}

double quarter_disk_max_radius(const NotchParam& a, Corner corner) {
  const double av = a.a();
  switch (corner) {
    case Corner::TopRight:
      // Walls of length 1; the arc must also stay clear of (a,a).
      return std::min(1.0, std::numbers::sqrt2 * (1.0 - av));
    case Corner::BottomRight:
    case Corner::TopLeft:
      return 1.0 - av;
    case Corner::NotchBottom:
    case Corner::NotchLeft:
      // At a = 0 both collapse onto the square corner (0,0).
      if (av == 0.0) return 1.0;
      return std::min(av, 1.0 - av);
  }
  return 0.0;
}

double oracle_arc_max_radius(const NotchParam& a, RegionKind kind) {
  const double av = a.a();
  switch (kind) {
    case RegionKind::FullCircle:
      // Inscribed in the strip of width 1-a, or wedged into the (1,1) corner.
      return std::min(0.5, std::numbers::sqrt2 * (1.0 - av) / (1.0 + std::numbers::sqrt2));
    case RegionKind::Semicircle:
      return std::min(0.5, 1.0 - av);
    case RegionKind::ThreeQuarterCircle:
      return std::min(av, 1.0 - av);
    case RegionKind::NotchQuarterCircle:
      return av > 0.0 ? 1.0 : 0.0;
    default:
      throw DomainError("not an oracle-only arc kind: " + std::string(to_string(kind)));
  }
}

double radius_for_area(const NotchParam& a, RegionKind kind, double t) {
  if (!(t > 0.0)) throw DomainError("area must be positive");
  switch (kind) {
    case RegionKind::S1: return std::sqrt(4.0 * t / kPi);
    case RegionKind::FullCircle: return std::sqrt(t / kPi);
    case RegionKind::Semicircle: return std::sqrt(2.0 * t / kPi);
    case RegionKind::ThreeQuarterCircle: return std::sqrt(4.0 * t / (3.0 * kPi));
    case RegionKind::NotchQuarterCircle: return std::sqrt(4.0 * (t + a.a() * a.a()) / kPi);
    default:
      throw DomainError("radius_for_area: not a circular kind: " + std::string(to_string(kind)));
  }
}

bool feasible(const NotchParam& a, const CandidateRegion& region, double theta_max) {
  const double av = a.a();
  return std::visit(
      Overloaded{
          [&](const QuarterDisk& q) {
            return q.radius > 0.0 && q.radius <= quarter_disk_max_radius(a, q.corner) + kFeasibilitySlack;
          },
          [&](const UnitChord& c) { return c.offset > 0.0 && c.offset <= 1.0 - av + kFeasibilitySlack; },
          [&](const ShortChord& c) { return av > 0.0 && c.offset > 0.0 && c.offset <= av + kFeasibilitySlack; },
          [&](const CornerArc& arc) { return within(arc.theta, 0.0, theta_max); },
          [&](const OracleArc& arc) {
            switch (arc.kind) {
              case RegionKind::FullCircle:
              case RegionKind::Semicircle:
              case RegionKind::ThreeQuarterCircle:
                return arc.radius > 0.0 && arc.radius <= oracle_arc_max_radius(a, arc.kind) + kFeasibilitySlack;
              case RegionKind::NotchQuarterCircle:
                return av > 0.0 && arc.radius > av &&
                       arc.radius <= oracle_arc_max_radius(a, arc.kind) + kFeasibilitySlack;
              default:
                return false;
            }
          },
          [&](const RegionUnion& u) {
            if (u.parts.empty()) return false;
            for (const auto& part : u.parts) {
              if (!feasible(a, part, theta_max)) return false;
            }
            return true;
          },
      },
      region.shape);
}

bool kind_feasible_at_area(const NotchParam& a, RegionKind kind, double t) {
  if (!(t > 0.0)) return false;
  const double av = a.a();
  auto disk_area = [](double r, double fraction) { return fraction * kPi * r * r; };
  switch (kind) {
    case RegionKind::S1:
      for (Corner c : kAllCorners) {
        if (t <= disk_area(quarter_disk_max_radius(a, c), 0.25) + kFeasibilitySlack) return true;
      }
      return false;
    case RegionKind::S2: return t <= 1.0 - av + kFeasibilitySlack;
    case RegionKind::S3: return av > 0.0 && t <= a.notch_strip_area() + kFeasibilitySlack;
    case RegionKind::S4: return within(t, a.notch_strip_area(), a.half_area());
    case RegionKind::FullCircle:
      return t <= disk_area(oracle_arc_max_radius(a, kind), 1.0) + kFeasibilitySlack;
    case RegionKind::Semicircle:
      return t <= disk_area(oracle_arc_max_radius(a, kind), 0.5) + kFeasibilitySlack;
    case RegionKind::ThreeQuarterCircle:
      return av > 0.0 && t <= disk_area(oracle_arc_max_radius(a, kind), 0.75) + kFeasibilitySlack;
    case RegionKind::NotchQuarterCircle:
      return av > 0.0 && t <= disk_area(1.0, 0.25) - av * av + kFeasibilitySlack;
    case RegionKind::Union:
      return false;
  }
  return false;
}

AreaPerimeter region_area_perimeter(const NotchParam& a, const CandidateRegion& region, double theta_max) {
  if (!feasible(a, region, theta_max)) {
    throw InfeasibleRegionError("region does not fit in Q_a: " + region.describe());
  }
  const double av = a.a();
  return std::visit(
      Overloaded{
          [&](const QuarterDisk& q) {
            return AreaPerimeter{0.25 * kPi * q.radius * q.radius, 0.5 * kPi * q.radius};
          },
          [&](const UnitChord& c) { return AreaPerimeter{c.offset, 1.0}; },
          [&](const ShortChord& c) { return AreaPerimeter{(1.0 - av) * c.offset, 1.0 - av}; },
          [&](const CornerArc& arc) {
            const double theta = std::min(std::max(arc.theta, 0.0), theta_max);
            return AreaPerimeter{s4_area(a, theta, theta_max), s4_perimeter(a, theta, theta_max)};
          },
          [&](const OracleArc& arc) {
            const double r = arc.radius;
            switch (arc.kind) {
              case RegionKind::FullCircle: return AreaPerimeter{kPi * r * r, 2.0 * kPi * r};
              case RegionKind::Semicircle: return AreaPerimeter{0.5 * kPi * r * r, kPi * r};
              case RegionKind::ThreeQuarterCircle: return AreaPerimeter{0.75 * kPi * r * r, 1.5 * kPi * r};
              default: return AreaPerimeter{0.25 * kPi * r * r - av * av, 0.5 * kPi * r};
            }
          },
          [&](const RegionUnion& u) {
            AreaPerimeter total{0.0, 0.0};
            for (const auto& part : u.parts) {
              const auto ap = region_area_perimeter(a, part, theta_max);
              total.area += ap.area;
              total.perimeter += ap.perimeter;
            }
            return total;
          },
      },
      region.shape);
}

double circular_segment_area(double r, double ell) {
  if (!(r > 0.0)) throw DomainError("circle radius must be positive");
  if (!(ell >= 0.0) || ell > 2.0 * r * (1.0 + 1e-14)) {
    std::ostringstream msg;
    msg << "chord length " << ell << " exceeds diameter " << 2.0 * r;
    throw DomainError(msg.str());
  }
  const double half_angle = std::asin(std::min(1.0, ell / (2.0 * r)));
  // r^2/2 (2h - sin 2h) = r^2 (h - sin h cos h)
  return r * r * theta_minus_sin_cos(half_angle);
}

}  // namespace isoprofile::geometry
