#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decycle {

/// Process exit codes of the decycle tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitOutOfRange = 3,
    kExitIo = 4,
    kExitRefuted = 5,
    kExitResourceLimit = 6,
};

/// Runs the command line `args` (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace decycle
