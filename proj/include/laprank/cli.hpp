#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laprank::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         // bad flags or unusable input
  kNotConverged = 3,  // results written with converged = false
};

/// Runs `laprank <args...>` (args excludes the program name). Human output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laprank::cli
