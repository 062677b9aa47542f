#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaidx::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitVerifyFailed = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaidx::cli
