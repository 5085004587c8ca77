#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcds::cli {

/// Exit codes: 0 success or agreement, 1 verified disagreement or failed
/// check, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcds::cli
