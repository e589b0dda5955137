#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dpb::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    ok = 0,
    check_failed = 1,
    usage = 2,
};

/// Runs the tool on argv[1..] and writes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dpb::cli
