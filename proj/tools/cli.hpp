#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfcoh::cli {

// Runs the command line given by args (without the program name), writing
// results to out and diagnostics to err.  Exit codes: 0 success,
// 1 verification failure, 2 usage error or unsupported range.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace surfcoh::cli
