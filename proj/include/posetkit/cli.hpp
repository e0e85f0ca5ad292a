#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetkit::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

// Entry point of the posetkit command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetkit::cli
