#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace awplan::cli {

enum ExitCode : int {
  kOk = 0,
  kNoFeasibleOption = 1,  // also: validate found violations, estimate is Infeasible
  kInputError = 2,
};

/// Entry point behind the `awplan` binary. `args` excludes the program name.
/// Results go to `out` (or --out files), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace awplan::cli
