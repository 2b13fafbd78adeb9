#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <string>
#include <vector>

#include "isoprofile/errors.hpp"
#include "isoprofile/oracle.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/verify.hpp"
#include "output.hpp"

namespace isoprofile::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double round_to_digits(double value, int digits) { return std::stod(format_number(value, digits)); }

int cmd_constants(bool json, int precision, std::ostream& out) {
  solvers::SolverConfig cfg;
  cfg.abs_tol = std::max(std::pow(10.0, -(precision + 2)), 1e-15);
  cfg.rel_tol = cfg.abs_tol;
  const auto bp = solvers::Breakpoints::compute(cfg);
  const std::pair<const char*, double> values[] = {
      {"theta_max", bp.theta_max()}, {"t0", bp.t0()}, {"alpha", bp.alpha()},
      {"beta", bp.beta()},           {"gamma", bp.gamma()},
  };
  if (json) {
    nlohmann::ordered_json doc;
    for (const auto& [key, value] : values) doc[key] = round_to_digits(value, precision);
    doc["gamma_exact"] = "1/(1+pi)";
    doc["precision"] = precision;
    out << doc.dump() << '\n';
    return kOk;
  }
  for (const auto& [key, value] : values) {
    std::string name = key;
    name.resize(10, ' ');
    out << name << "= " << format_number(value, precision);
    if (std::string(key) == "gamma") out << "  (exact: 1/(1+pi))";
    out << '\n';
  }
  return kOk;
}

geometry::NotchParam parse_notch(double a) {
  try {
    return geometry::NotchParam(a);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int cmd_profile(double a_value, int n, const std::string& csv_path, const std::string& svg_path,
                std::ostream& out) {
  const auto a = parse_notch(a_value);
  if (n < 2) throw UsageError("--n must be at least 2");
  const auto bp = solvers::Breakpoints::compute();
  std::vector<profile::ProfilePoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) points.push_back(profile::f(a, a.half_area() * k / n, bp));

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw IoError("cannot open " + csv_path + " for writing");
  write_profile_csv(csv, points);
  if (!csv.flush()) throw IoError("failed writing " + csv_path);
  out << "wrote " << n << " rows to " << csv_path << '\n';

  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw IoError("cannot open " + svg_path + " for writing");
    write_profile_svg(svg, a.a(), points, profile_guides(a, bp));
    if (!svg.flush()) throw IoError("failed writing " + svg_path);
    out << "wrote plot to " << svg_path << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& grid, std::ostream& out) {
  verify::VerifyOptions opts;
  opts.seed = seed;
  if (!grid.empty()) {
    std::smatch m;
    if (!std::regex_match(grid, m, std::regex(R"((\d+)x(\d+))"))) {
      throw UsageError("--grid expects RxC, e.g. 20x200, got '" + grid + "'");
    }
    opts.grid_a = std::stoi(m[1]);
    opts.grid_t = std::stoi(m[2]);
    if (opts.grid_a < 4 || opts.grid_t < 1) throw UsageError("--grid needs R >= 4 and C >= 1");
  }
  const auto bp = solvers::Breakpoints::compute();
  std::vector<verify::SuiteReport> reports;
  if (suite == "lemmas" || suite == "all") reports.push_back(verify::verify_lemmas(bp, opts));
  if (suite == "section3" || suite == "all") reports.push_back(verify::verify_section3(opts));
  if (suite == "oracle" || suite == "all") reports.push_back(verify::verify_oracle(bp, opts));
  bool ok = true;
  for (const auto& r : reports) {
    out << format_report(r);
    ok = ok && r.all_passed();
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_oracle(double a_value, double t, int resolution, std::ostream& out) {
  const auto a = parse_notch(a_value);
  if (!(t > 0.0) || t > a.half_area()) {
    throw UsageError("--t must lie in (0, " + format_number(a.half_area()) + "]");
  }
  if (resolution < 10) throw UsageError("--resolution must be at least 10");
  const auto bp = solvers::Breakpoints::compute();
  const auto point = profile::f(a, t, bp);
  const auto best = oracle::oracle_min(a, t, resolution, bp);
  const double diff = std::abs(best.perimeter - point.perimeter);

  out << "a = " << format_number(a.a()) << ", t = " << format_number(t) << ", resolution = " << resolution
      << '\n'
      << "f_a(t)      = " << format_number(point.perimeter) << "  minimizers " << point.minimizers.to_string()
      << '\n'
      << "oracle min  = " << format_number(best.perimeter) << "  " << best.region.describe() << '\n'
      << "|difference| = " << format_number(diff, 3) << '\n'
      << "best perimeter by kind:\n";
  bool declared = false;
  for (const auto& c : oracle::best_by_kind(a, t, resolution, bp)) {
    std::string name(geometry::to_string(c.kind()));
    name.resize(22, ' ');
    out << "  " << name << format_number(c.perimeter) << "  margin " << format_number(c.perimeter - point.perimeter, 3)
        << '\n';
    if (c.perimeter <= best.perimeter + 1e-9 && point.minimizers.contains(c.kind())) declared = true;
  }
  const bool ok = diff < 1e-9 && declared;
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative isoperimetric profile of the notched unit square"};
  app.name("isoprofile");
  app.require_subcommand(1);

  bool json = false;
  int precision = 12;
  auto* constants = app.add_subcommand("constants", "Solve and print the breakpoint constants");
  constants->add_flag("--json", json, "Print a flat JSON object");
  constants->add_option("--precision", precision, "Significant digits (4-15)")->check(CLI::Range(4, 15));

  double a = 0.0;
  int n = 0;
  std::string csv_path;
  std::string svg_path;
  auto* prof = app.add_subcommand("profile", "Sample f_a on a uniform grid and write CSV (and SVG)");
  prof->add_option("--a", a, "Notch size, 0 <= a < 1")->required();
  prof->add_option("--n", n, "Number of grid points, >= 2")->required();
  prof->add_option("--out", csv_path, "CSV output path")->required();
  prof->add_option("--svg", svg_path, "Optional SVG output path");

  std::string suite;
  std::uint64_t seed = 42;
  std::string grid;
  auto* ver = app.add_subcommand("verify", "Run an invariant suite");
  ver->add_option("suite", suite, "lemmas | section3 | oracle | all")
      ->required()
      ->check(CLI::IsMember({"lemmas", "section3", "oracle", "all"}));
  ver->add_option("--seed", seed, "Seed for randomized checks");
  ver->add_option("--grid", grid, "Oracle grid RxC (a values x t values), default 20x200");

  double t = 0.0;
  int resolution = 200;
  auto* orc = app.add_subcommand("oracle", "Compare f_a(t) with brute-force candidate enumeration");
  orc->add_option("--a", a, "Notch size, 0 <= a < 1")->required();
  orc->add_option("--t", t, "Area, 0 < t <= (1-a^2)/2")->required();
  orc->add_option("--resolution", resolution, "Union area splits, >= 10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "isoprofile: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*constants) return cmd_constants(json, precision, out);
    if (*prof) return cmd_profile(a, n, csv_path, svg_path, out);
    if (*ver) return cmd_verify(suite, seed, grid, out);
    if (*orc) return cmd_oracle(a, t, resolution, out);
  } catch (const UsageError& e) {
    err << "isoprofile: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "isoprofile: " << e.what() << '\n';
    return kIoError;
  } catch (const SolverError& e) {
    err << "isoprofile: solver failure: " << e.what() << '\n';
    return kSolverFailed;
  } catch (const std::exception& e) {
    err << "isoprofile: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace isoprofile::cli
