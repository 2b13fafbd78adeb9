#pragma once

#include <ostream>

namespace isoprofile::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kSolverFailed = 2,
  kUsage = 64,
  kIoError = 74,
};

/// Entry point of the `isoprofile` tool, with injectable streams for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isoprofile::cli
