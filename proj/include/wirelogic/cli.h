#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wirelogic::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kFault = 3,
  kModuleError = 4,
};

// Runs one command line (args excludes the program name). Artifacts go to
// `out` unless an -o path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wirelogic::cli
