#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace onefold {

// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitIo = 3,
};

// Runs one CLI invocation. args excludes the program name. Data goes to out
// only when the whole command succeeded; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onefold
