#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omega3rb {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2, kExitBudget = 3 };

/// Runs the tool on args (without the program name). Reports go to `out` or
/// to the --output file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega3rb
