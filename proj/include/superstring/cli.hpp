#pragma once

// Command-line front end. Exit codes: 0 success, 1 unreadable or empty
// input, 2 exact solver limit exceeded, 3 an emitted superstring failed
// revalidation, 4 a verification campaign found violations, 64 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace superstring {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitSolverLimit = 2,
  kExitValidation = 3,
  kExitViolations = 4,
  kExitUsage = 64,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superstring
