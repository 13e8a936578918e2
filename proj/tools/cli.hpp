#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcore::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

/// Default working precision when --precision is not given.
inline constexpr const char* kPrecisionEnv = "TCORE_PRECISION";

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcore::cli
