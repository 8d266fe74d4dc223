#pragma once

#include <iosfwd>

namespace abwalk {

/// Exit codes of the abwalk command.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitValidation = 2,
    kExitInfeasible = 3,
    kExitBudget = 4,
    kExitIo = 5,
};

/// Entry point behind the `abwalk` binary; primary output goes to `out`
/// unless --output names a file, diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abwalk
