#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;  // a mathematical check failed
inline constexpr int kExitConfig = 2;   // usage or configuration error
inline constexpr int kExitInternal = 3; // unexpected exception

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Expands "2", "1..3" or "1,3" into a sorted list of distinct values.
std::vector<int> parse_range(const std::string& text);

}  // namespace permlab::cli
