#pragma once

#include <string>
#include <vector>

namespace thetadet {

struct CommandResult {
    int status = 0;   // 0 ok, 1 unexpected, 2 bad input, 3 disagreement, 4 oracle guard
    std::string out;  // the full report text
};

// Runs one command-line invocation (arguments without the program name) and
// captures its report.  Never throws; failures are encoded in the status.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace thetadet
