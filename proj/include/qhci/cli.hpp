#pragma once

#include <iosfwd>

namespace qhci {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitVerifyFailed = 3,
};

/// Parse argv, run one subcommand (info, euler, tevelev, gw, verify) and
/// write its document to `out`. Validation failures print a JSON error
/// object to `out` and return kExitValidation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qhci
