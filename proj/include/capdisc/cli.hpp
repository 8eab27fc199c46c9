#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace capdisc {

/// Process exit codes of the capdisc tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,  ///< I/O or bad input data
  kExitUsage = 2,
  kExitCounterexample = 3,
  kExitResidual = 4,
  kExitSizeLimit = 5,
};

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace capdisc
