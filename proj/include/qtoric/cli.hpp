#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtoric::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  // well-formed negative answer
  kInputError = 2,
  kInternalError = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtoric::cli
