#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace detring::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 ok, 1 usage or validation error, 2 internal-check failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace detring::cli
