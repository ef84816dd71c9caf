#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sroots::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kInvalidParameters = 2, kCheckFailed = 3 };

/// Runs the command line `args` (without the program name); normal output
/// goes to `out` unless --out redirects it, diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sroots::cli
