#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nichols::cli {

// Runs the command-line interface on the given arguments (without the
// program name), writing results to `out` and diagnostics to `err`.
// Exit codes: 0 success / checks pass, 1 a verification check failed,
// 2 usage or input error, 3 a compute run ended truncated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nichols::cli
