#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wildnum {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;
inline constexpr int kExitTimeLimit = 3;

/// The `wildnum` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wildnum
