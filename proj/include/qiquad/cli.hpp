#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qiquad::cli {

enum ExitCode : int { success = 0, usage_error = 2, numeric_failure = 3 };

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qiquad::cli
