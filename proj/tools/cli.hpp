#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walker::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kNumericalError = 3,
  kAssumptionFailure = 4,
  kIoError = 5,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walker::cli
