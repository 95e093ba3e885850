#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sunspec::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kCapExceeded = 3,
  kMismatch = 4,
};

inline constexpr const char* kVersion = "sunspec 0.1.0";

/// Runs one invocation. `args` excludes the program name. Environment lookups
/// (SUNSPEC_THREADS) go through `threads_env`, which may be null.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* threads_env = nullptr);

}  // namespace sunspec::cli
