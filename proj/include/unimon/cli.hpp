#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unimon::cli {

/// Runs one command line (without the program name) and returns the exit
/// code: 0 success, 1 malformed input, 2 validation failure, 3 undecided or
/// infeasible.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unimon::cli
