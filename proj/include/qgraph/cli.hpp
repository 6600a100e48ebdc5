#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgraph::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kHypothesisViolated = 1,
    kUsageError = 2,
    kNumericalError = 3,
    kPreconditionNotMet = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgraph::cli
