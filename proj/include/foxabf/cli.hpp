#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foxabf::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the tool on `args` (without the program name). Documents go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foxabf::cli
