#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srtrunc::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInconsistency = 2,
  kResourceBound = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srtrunc::cli
