#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfs::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMismatch = 2,
  kBudget = 3,
  kIo = 4,
};

/// Runs the command line `args` (without the program name). Reads plan
/// files from `in` when asked for "-", writes results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gfs::cli
