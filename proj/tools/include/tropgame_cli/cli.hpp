#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropgame::cli {

/// Exit statuses: 0 success, 1 usage error, 2 unreadable input, 70 internal
/// failure, and one status per library error code (see exitCodeFor).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 70;

/// Runs the command line tool. args[0] is the program name. Results and
/// structured errors go to `out` as JSON; help text goes to `out` too.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropgame::cli
