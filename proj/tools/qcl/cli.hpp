#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcl::cli {

// Exit codes: 0 success, 1 computational error, 2 input or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCompute = 1;
inline constexpr int kExitInput = 2;

// Runs one command line (without the program name), writing results to out
// and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcl::cli
