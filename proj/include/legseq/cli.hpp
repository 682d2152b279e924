#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace legseq::cli {

enum ExitCode : int {
    ok = 0,
    input_error = 1,
    condition_failure = 2,
    budget_exceeded = 3,
    table_mismatch = 4,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace legseq::cli
