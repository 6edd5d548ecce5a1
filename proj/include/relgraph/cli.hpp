#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relgraph {

// Exit statuses of the command-line tool.
enum ExitCode : int {
    exit_positive = 0,
    exit_negative = 1,
    exit_usage = 2,
    exit_budget = 3,
};

// Largest graph `solve` accepts on either side.
inline constexpr std::size_t cli_solver_cap = 16;

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace relgraph
