#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace verify {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Human output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verify
