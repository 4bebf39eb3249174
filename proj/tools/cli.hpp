#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nugatory {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nugatory
