#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "isoprofile/profile.hpp"

namespace isoprofile::cli {

/// printf("%.<digits>g").
std::string format_number(double value, int digits = 12);

void write_profile_csv(std::ostream& out, const std::vector<profile::ProfilePoint>& points);

struct Guide {
  double t;
  std::string label;
};

/// Dashed vertical guides worth drawing for this notch: T, tau (only when
/// alpha < a <= beta), a(1-a) (only once S3 appears) and (1-a^2)/2.
std::vector<Guide> profile_guides(const geometry::NotchParam& a, const solvers::Breakpoints& bp);

/// Stand-alone SVG 1.1 plot of the sampled profile.
void write_profile_svg(std::ostream& out, double a, const std::vector<profile::ProfilePoint>& points,
                       const std::vector<Guide>& guides);

}  // namespace isoprofile::cli
