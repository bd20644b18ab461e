#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamrecon::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,        ///< I/O problems, or a verification error above tolerance
  kConditionFails = 2, ///< a sufficient reconstruction condition does not hold
  kInconsistent = 3,   ///< input data is not the restriction of an eigenfunction
  kUsage = 64          ///< invalid flags or parameters
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamrecon::cli
