#ifndef HYP3F2_TOOLS_CLI_HPP_
#define HYP3F2_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hyp3f2::cli {

enum ExitCode : int {
  kOk = 0,
  kResidualAboveTolerance = 1,
  kDegenerateShifts = 2,
  kNonGeneric = 3,
  kSlowConvergence = 4,
  kGroupCheckFailed = 5,
  kUsage = 64,
};

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyp3f2::cli

#endif  // HYP3F2_TOOLS_CLI_HPP_
