#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigspec::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kConfigError = 2,
  kNumericalError = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigspec::cli
