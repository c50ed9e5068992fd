#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchbound::cli {

// Exit codes of the matchbound tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTooLarge = 3;

// Runs one invocation. `args` excludes the program name. Graphs are read
// from `in` unless -i is given; reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace matchbound::cli
