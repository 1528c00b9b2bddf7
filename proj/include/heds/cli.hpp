#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heds {

enum ExitStatus : int {
  kExitOk = 0,
  kExitValidationErrors = 1,
  kExitUsage = 2,
  kExitParse = 3,
};

/// Runs the `heds` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heds
