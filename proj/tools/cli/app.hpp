#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUnsupported = 2,
};

/// Runs one invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
