#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fzo::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (argv[0] included) and returns the exit code.
/// Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fzo::cli
