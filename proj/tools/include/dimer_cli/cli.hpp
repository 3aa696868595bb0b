#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dimer::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 1 a requested check failed, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimer::cli
