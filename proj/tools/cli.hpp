#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idio::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`; diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idio::cli
