#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmz::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kBudgetExceeded = 2,
  kVerificationFailed = 3,
};

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmz::cli
