#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperent {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation failed or exceeded capacity
inline constexpr int kExitUsage = 2;    // bad flags, unparsable input, unknown names

/// Runs the tool on `args` (without the program name), writing regular
/// output to `out` and diagnostics to `err`. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperent
