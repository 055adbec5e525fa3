#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mebsmote::cli {

// Process exit codes, one per error class.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIoError = 2,
    kParseError = 3,
    kInsufficientNeighbors = 4,
    kSingleClass = 5,
    kInvalidInput = 6,
};

// Runs the command line `args` (without the program name), writing normal
// output to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mebsmote::cli
