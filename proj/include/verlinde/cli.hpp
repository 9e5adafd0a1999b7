#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace verlinde {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMismatch = 2, kExitInvariant = 3 };

/// Runs the command line `args` (without the program name). Normal output goes to `out`
/// unless --out redirects it to a file; diagnostics and usage go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verlinde
