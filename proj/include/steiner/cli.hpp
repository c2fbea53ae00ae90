#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steiner::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

/// Runs one command; `args` excludes the program name. Returns the exit code:
/// 0 success, 1 usage or I/O error, 2 when a verified property fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steiner::cli
