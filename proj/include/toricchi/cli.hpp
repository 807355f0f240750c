#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricchi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMalformedInput = 2,
  kInvalidFan = 3,
  kComputationError = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricchi::cli
