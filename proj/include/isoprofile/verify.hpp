#pragma once

// Invariant suites behind `isoprofile verify`. Each check reports a margin:
// the worst-case slack of its inequality, positive when it passes.

#include <cstdint>
#include <string>
#include <vector>

#include "isoprofile/solvers.hpp"

namespace isoprofile::verify {

struct CheckResult {
  std::string name;
  bool passed;
  double margin;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int grid_a = 20;
  int grid_t = 200;
  int resolution = 200;
};

/// Notch sizes spread evenly over the four regimes [0,alpha], [alpha,beta],
/// [beta,gamma], [gamma,0.95], none of them on a regime boundary.
std::vector<double> stratified_notch_grid(int count, const solvers::Breakpoints& bp);

SuiteReport verify_lemmas(const solvers::Breakpoints& bp, const VerifyOptions& opts);
SuiteReport verify_section3(const VerifyOptions& opts);
SuiteReport verify_oracle(const solvers::Breakpoints& bp, const VerifyOptions& opts);

/// One line per check: status, name, margin, detail.
std::string format_report(const SuiteReport& report);

}  // namespace isoprofile::verify
