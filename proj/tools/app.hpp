#ifndef FSING_TOOLS_APP_HPP
#define FSING_TOOLS_APP_HPP

#include "fsing/ideal.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fsing::cli {

enum ExitCode { exit_ok = 0, exit_input = 1, exit_precondition = 2, exit_internal = 3 };

/// Runs `fsing` with the arguments after the program name. The report goes
/// to `out`, diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reduced Groebner basis in print order: leading monomial degree ascending,
/// then descending in the ring's order.
std::vector<Polynomial> sorted_basis(const Ideal& I);

/// Splits a [task] line on whitespace; double quotes group words.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace fsing::cli

#endif  // FSING_TOOLS_APP_HPP
