#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dickson::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kMismatch = 2,
    kUsage = 3,
};

/// Runs one command line (without the program name) and returns the exit code.
/// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dickson::cli
