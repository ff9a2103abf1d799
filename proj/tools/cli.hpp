#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ribbon::cli {

enum ExitCode : int {
    kOk = 0,
    kDisagreement = 1,
    kUsage = 2,
    kTimeoutOnly = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ribbon::cli
