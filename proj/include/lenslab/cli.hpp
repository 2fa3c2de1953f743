#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lenslab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,        ///< a verification found violations, or --expect-feasible failed
  kInvalidInput = 2,  ///< unknown command or flag, or arguments out of range
};

/// Runs one command line (without the program name). Data goes to `out`;
/// usage text, diagnostics and cache statistics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lenslab::cli
