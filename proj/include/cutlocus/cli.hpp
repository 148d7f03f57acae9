#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cutlocus {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitBudget = 3,
  kExitVerification = 4,
};

// Runs the command line (args excludes the program name). Results go to
// `out` (or to --output, written atomically), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutlocus
