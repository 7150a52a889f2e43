#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qalg::cli {

/// Exit codes: 0 success, 1 failed verification or runtime error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qalg::cli
