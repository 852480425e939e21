#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seqcol::cli {

enum ExitCode : int {
    exit_yes = 0,
    exit_no = 1,
    exit_budget = 2,
    exit_input = 3,
};

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int;

}  // namespace seqcol::cli
