#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charvar::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalid = 2,
  kBudget = 3,
  kDisagreement = 4,
};

/// args excludes the program name. Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charvar::cli
