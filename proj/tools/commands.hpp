#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfspan::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Output files
/// are written where requested; "-" or an absent --out writes to `out`.
/// Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfspan::cli
