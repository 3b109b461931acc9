#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intorbit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kSoundness = 3;

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Regular output goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace intorbit::cli
