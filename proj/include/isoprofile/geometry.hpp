#pragma once

// Closed-form area and relative perimeter of the candidate regions inside the
// notched unit square Q_a = [0,1]^2 \ [0,a)^2.
//
// Q_a has five convex corners, (1,1), (1,0), (0,1), (a,0), (0,a), and one
// non-convex corner at (a,a). Every formula here is a pure function; nothing
// is solved numerically. The arc angle bound theta_max is supplied by the
// caller (see solvers.hpp).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace isoprofile::geometry {

/// Absolute slack used by every feasibility test on areas and angles.
inline constexpr double kFeasibilitySlack = 1e-12;

/// Notch size of Q_a, 0 <= a < 1.
class NotchParam {
 public:
  explicit NotchParam(double a);

  double a() const { return a_; }
  /// |Q_a| = 1 - a^2.
  double domain_area() const { return 1.0 - a_ * a_; }
  /// |Q_a| / 2, the largest area the profile is defined for.
  double half_area() const { return 0.5 * domain_area(); }
  /// a(1-a): area of the S3 region with the longest admissible offset, and
  /// of the S4 region at theta = 0.
  double notch_strip_area() const { return a_ * (1.0 - a_); }

 private:
  double a_;
};

enum class RegionKind {
  S1,                  // quarter disk at a convex corner
  S2,                  // cut by a chord of length 1
  S3,                  // cut by a chord of length 1-a
  S4,                  // arc from (a,a) to a wall of length 1
  FullCircle,
  Semicircle,
  ThreeQuarterCircle,  // centred on (a,a), ends on both notch walls
  NotchQuarterCircle,  // centred on (0,0), surrounds the notch
  Union,
};

std::string_view to_string(RegionKind kind);

/// The five convex corners of Q_a.
enum class Corner { TopRight, BottomRight, TopLeft, NotchBottom, NotchLeft };

inline constexpr Corner kAllCorners[] = {Corner::TopRight, Corner::BottomRight,
                                         Corner::TopLeft, Corner::NotchBottom,
                                         Corner::NotchLeft};

std::string_view to_string(Corner corner);

struct QuarterDisk {
  double radius;
  Corner corner;
};

/// S2: a chord of length 1 parallel to a unit wall at distance `offset`.
struct UnitChord {
  double offset;
};

/// S3: a chord of length 1-a parallel to a (1-a)-wall at distance `offset`.
struct ShortChord {
  double offset;
};

/// S4(a, theta). `reflected` picks the top wall instead of the right wall;
/// area and perimeter do not depend on it.
struct CornerArc {
  double theta;
  bool reflected = false;
};

/// Regions the minimizer search rules out but the oracle still enumerates.
struct OracleArc {
  RegionKind kind;  // FullCircle, Semicircle, ThreeQuarterCircle or NotchQuarterCircle
  double radius;
};

struct CandidateRegion;

/// Disjoint union, compared through scalar sums only (placement is not modelled).
struct RegionUnion {
  std::vector<CandidateRegion> parts;
};

struct CandidateRegion {
  std::variant<QuarterDisk, UnitChord, ShortChord, CornerArc, OracleArc, RegionUnion> shape;

  RegionKind kind() const;
  std::string describe() const;
};

struct AreaPerimeter {
  double area;
  double perimeter;
};

// S4 formulas. theta in [0, theta_max]; theta = 0 returns the continuous
// extension (perimeter 1-a, area a(1-a)).
double s4_perimeter(const NotchParam& a, double theta, double theta_max);
double s4_area(const NotchParam& a, double theta, double theta_max);

/// Largest quarter-disk radius that fits at `corner` while ending on its two walls.
double quarter_disk_max_radius(const NotchParam& a, Corner corner);

/// Largest radius for the oracle-only arc kinds; 0 when the kind cannot occur.
double oracle_arc_max_radius(const NotchParam& a, RegionKind kind);

/// Radius of a region of the given arc kind enclosing area t.
double radius_for_area(const NotchParam& a, RegionKind kind, double t);

bool feasible(const NotchParam& a, const CandidateRegion& region, double theta_max);

/// Whether some region of `kind` (connected kinds only) with area exactly t fits.
bool kind_feasible_at_area(const NotchParam& a, RegionKind kind, double t);

/// Throws InfeasibleRegionError when `feasible` is false.
AreaPerimeter region_area_perimeter(const NotchParam& a, const CandidateRegion& region,
                                    double theta_max);

/// Smaller area cut from a circle of radius r by a chord of length ell.
double circular_segment_area(double r, double ell);

/// theta - sin(theta)cos(theta), accurate near 0.
double theta_minus_sin_cos(double theta);

/// 1 - sin(theta)/theta, accurate near 0.
double one_minus_sinc(double theta);

}  // namespace isoprofile::geometry
