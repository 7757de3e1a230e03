#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordgap::cli {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,     // a checked property failed
  kUsageError = 2,    // bad arguments or unparsable input
  kPrecondition = 3,  // e.g. a demo on a ring lacking the needed capability
};

/// Runs one invocation; `args` excludes the program name. Deterministic
/// given `args`: repeated runs write byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordgap::cli
