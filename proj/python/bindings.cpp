#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "isoprofile/corner_checks.hpp"
#include "isoprofile/errors.hpp"
#include "isoprofile/geometry.hpp"
#include "isoprofile/oracle.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/verify.hpp"

namespace py = pybind11;
using namespace isoprofile;
using geometry::NotchParam;

namespace {

const solvers::Breakpoints& breakpoints() {
  static const solvers::Breakpoints bp = solvers::Breakpoints::compute();
  return bp;
}

std::vector<std::string> kind_names(const profile::MinimizerSet& set) {
  std::vector<std::string> out;
  for (auto kind : set.kinds()) out.emplace_back(geometry::to_string(kind));
  return out;
}

py::dict point_dict(const profile::ProfilePoint& p) {
  py::dict d;
  d["a"] = p.a;
  d["t"] = p.t;
  d["perimeter"] = p.perimeter;
  d["minimizers"] = kind_names(p.minimizers);
  d["theta"] = p.theta ? py::cast(*p.theta) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relative isoperimetric profile of the notched unit square";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<InfeasibleRegionError>(m, "InfeasibleRegionError", PyExc_ValueError);
  py::register_exception<BranchError>(m, "BranchError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("constants", [] {
    const auto& bp = breakpoints();
    py::dict d;
    d["theta_max"] = bp.theta_max();
    d["t0"] = bp.t0();
    d["alpha"] = bp.alpha();
    d["beta"] = bp.beta();
    d["gamma"] = bp.gamma();
    return d;
  }, "Breakpoint constants theta_max, t0, alpha, beta, gamma.");

  m.def("profile", [](double a, double t) { return point_dict(profile::f(NotchParam(a), t, breakpoints())); },
        py::arg("a"), py::arg("t"), "f_a(t) with its minimizer kinds and, for S4, the arc angle.");

  m.def("profile_grid", [](double a, int n) {
    const NotchParam notch(a);
    if (n < 2) throw DomainError("n must be at least 2");
    py::list rows;
    for (int k = 1; k <= n; ++k) rows.append(point_dict(profile::f(notch, notch.half_area() * k / n, breakpoints())));
    return rows;
  }, py::arg("a"), py::arg("n"), "f_a on the uniform grid t_k = k (1-a^2) / (2n), k = 1..n.");

  m.def("dP_dt", [](double a, double t) { return profile::dP_dt(NotchParam(a), t, breakpoints()); },
        py::arg("a"), py::arg("t"));

  m.def("s4_perimeter", [](double a, double theta) {
    return geometry::s4_perimeter(NotchParam(a), theta, breakpoints().theta_max());
  }, py::arg("a"), py::arg("theta"));
  m.def("s4_area", [](double a, double theta) {
    return geometry::s4_area(NotchParam(a), theta, breakpoints().theta_max());
  }, py::arg("a"), py::arg("theta"));
  m.def("theta_of_area", [](double a, double t) { return breakpoints().theta_of_area(NotchParam(a), t); },
        py::arg("a"), py::arg("t"));
  m.def("circular_segment_area", &geometry::circular_segment_area, py::arg("r"), py::arg("ell"));

  m.def("sigma", [](double a) { return breakpoints().sigma(a); }, py::arg("a"));
  m.def("tau", [](double a) { return breakpoints().tau(a); }, py::arg("a"));
  m.def("transition", [](double a) { return breakpoints().transition(a); }, py::arg("a"));
  m.def("a_of_t", [](double t) {
    const auto pair = solvers::a_of_t(t, breakpoints());
    return py::make_tuple(pair.a, pair.theta);
  }, py::arg("t"), "(a, theta) of the unit-perimeter S4 region with area t.");

  m.def("oracle_min", [](double a, double t, int resolution) {
    const auto best = oracle::oracle_min(NotchParam(a), t, resolution, breakpoints());
    py::dict d;
    d["perimeter"] = best.perimeter;
    d["kind"] = std::string(geometry::to_string(best.region.kind()));
    d["region"] = best.region.describe();
    return d;
  }, py::arg("a"), py::arg("t"), py::arg("resolution") = 200);

  m.def("deformation_width", &corner::deformation_width, py::arg("theta"), py::arg("ell"), py::arg("epsilon"));
  m.def("polyline_perimeter_gain", &corner::polyline_perimeter_gain, py::arg("theta"), py::arg("ell"),
        py::arg("epsilon"));
  m.def("strict_improvement", &corner::strict_improvement, py::arg("theta"), py::arg("ell"), py::arg("epsilon"));

  m.def("verify", [](const std::string& suite, std::uint64_t seed, int grid_a, int grid_t) {
    verify::VerifyOptions opts;
    opts.seed = seed;
    opts.grid_a = grid_a;
    opts.grid_t = grid_t;
    std::vector<verify::SuiteReport> reports;
    if (suite == "lemmas" || suite == "all") reports.push_back(verify::verify_lemmas(breakpoints(), opts));
    if (suite == "section3" || suite == "all") reports.push_back(verify::verify_section3(opts));
    if (suite == "oracle" || suite == "all") reports.push_back(verify::verify_oracle(breakpoints(), opts));
    if (reports.empty()) throw DomainError("unknown suite '" + suite + "'");
    bool ok = true;
    std::string text;
    for (const auto& r : reports) {
      ok = ok && r.all_passed();
      text += verify::format_report(r);
    }
    return py::make_tuple(ok, text);
  }, py::arg("suite"), py::arg("seed") = 42, py::arg("grid_a") = 20, py::arg("grid_t") = 200,
     "Run an invariant suite; returns (all_passed, report).");
}
