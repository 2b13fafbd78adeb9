#include "output.hpp"

#include <algorithm>
#include <cstdio>

namespace isoprofile::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 50.0;

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string px(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

}  // namespace

std::string format_number(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void write_profile_csv(std::ostream& out, const std::vector<profile::ProfilePoint>& points) {
  out << "t,perimeter,minimizers,theta\n";
  for (const auto& p : points) {
    out << format_number(p.t) << ',' << format_number(p.perimeter) << ',' << p.minimizers.to_string() << ',';
    if (p.theta) out << format_number(*p.theta);
    out << '\n';
  }
}

std::vector<Guide> profile_guides(const geometry::NotchParam& a, const solvers::Breakpoints& bp) {
  std::vector<Guide> guides;
  const double av = a.a();
  guides.push_back({bp.transition(av), "T"});
  const auto regime = profile::regime_of(av, bp);
  if (regime == profile::Regime::ArcThenChord && av > bp.alpha()) guides.push_back({bp.tau(av), "τ"});
  if (regime == profile::Regime::Notched) guides.push_back({a.notch_strip_area(), "a(1−a)"});
  guides.push_back({a.half_area(), "(1−a²)/2"});
  return guides;
}

void write_profile_svg(std::ostream& out, double a, const std::vector<profile::ProfilePoint>& points,
                       const std::vector<Guide>& guides) {
  double t_max = 0.0;
  double p_max = 0.0;
  for (const auto& p : points) {
    t_max = std::max(t_max, p.t);
    p_max = std::max(p_max, p.perimeter);
  }
  if (t_max <= 0.0) t_max = 1.0;
  p_max = p_max > 0.0 ? 1.1 * p_max : 1.0;
  const double plot_w = kWidth - 2.0 * kMargin;
  const double plot_h = kHeight - 2.0 * kMargin;
  auto sx = [&](double t) { return kMargin + plot_w * t / t_max; };
  auto sy = [&](double p) { return kHeight - kMargin - plot_h * p / p_max; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << px(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"14\">f_a(t), a = " << format_number(a) << "</text>\n";

  // Axes.
  out << "<line x1=\"" << px(kMargin) << "\" y1=\"" << px(kHeight - kMargin) << "\" x2=\""
      << px(kWidth - kMargin) << "\" y2=\"" << px(kHeight - kMargin) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << px(kMargin) << "\" y1=\"" << px(kHeight - kMargin) << "\" x2=\"" << px(kMargin)
      << "\" y2=\"" << px(kMargin) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << px(kWidth - kMargin) << "\" y=\"" << px(kHeight - kMargin + 32)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">t</text>\n"
      << "<text x=\"" << px(kMargin - 8) << "\" y=\"" << px(kMargin)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">P</text>\n"
      << "<text x=\"" << px(kMargin - 8) << "\" y=\"" << px(sy(p_max / 1.1) + 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << format_number(p_max / 1.1, 4)
      << "</text>\n";

  for (std::size_t i = 0; i < guides.size(); ++i) {
    const double x = sx(guides[i].t);
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(kHeight - kMargin) << "\" x2=\"" << px(x) << "\" y2=\""
        << px(kMargin) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n"
        << "<text x=\"" << px(x) << "\" y=\"" << px(kHeight - kMargin + 14 + 12 * (i % 2))
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << escape_xml(guides[i].label) << "</text>\n";
  }

  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"" << px(sx(0.0)) << ','
      << px(sy(0.0));
  for (const auto& p : points) out << ' ' << px(sx(p.t)) << ',' << px(sy(p.perimeter));
  out << "\"/>\n</svg>\n";
}

}  // namespace isoprofile::cli
