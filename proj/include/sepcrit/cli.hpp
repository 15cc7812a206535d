#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepcrit {

// Runs the command line given the arguments after the program name.
// Exit codes: 0 success, 2 bad arguments or invalid input, 3 a scan that was
// required to cross never did, 1 a repro check failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepcrit
