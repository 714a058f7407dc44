#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrzeta::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrzeta::cli
