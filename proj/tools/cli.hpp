#pragma once
// Command dispatch for the catnerve tool.

#include <iosfwd>
#include <string>
#include <vector>

namespace catnerve::cli {

enum ExitCode : int { success = 0, check_failed = 1, parse_error = 2, inconclusive = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace catnerve::cli
