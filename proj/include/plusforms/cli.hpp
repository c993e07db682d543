#pragma once

#include <iosfwd>
#include <vector>
#include <string>

namespace plusforms::cli {

/// Stable exit codes.
enum ExitCode : int {
  kVerified = 0,
  kMismatch = 1,
  kInsufficientPrecision = 2,
  kNonIntegral = 3,
  kUsage = 64,
};

/// Runs the command line `args` (without the program name). JSON goes to
/// `out`, the human-readable summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plusforms::cli
