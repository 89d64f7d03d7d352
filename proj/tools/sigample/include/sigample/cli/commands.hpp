#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sigample/error.hpp"

namespace sigample::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,     // parse or validation failure
  kUnknownName = 3,
  kPrecondition = 4,   // NotAmple, NotQuasiUnipotent, MissingToddData, ...
  kUsage = 64,
};

int exit_code_for(ErrorKind kind);

/// Runs the command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigample::cli
