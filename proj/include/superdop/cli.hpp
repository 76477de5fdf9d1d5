#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superdop {

/// Process exit codes of the command-line front-end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailed = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitBinding = 4,
  kExitChartMismatch = 5,
  kExitParity = 6,
  kExitDomain = 7,
  kExitIo = 8,
};

/// Runs `superdop <command> [options] [operands...]`; `args` excludes the
/// program name. Operands containing '=' are declarations, the rest are
/// expressions evaluated in the session.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superdop
