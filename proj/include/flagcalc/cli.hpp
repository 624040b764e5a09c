#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagcalc {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitInconsistent = 3 };

/// Runs the front end on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcalc
