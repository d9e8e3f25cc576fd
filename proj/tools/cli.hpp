#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwc::cli {

enum ExitCode : int {
    kAllPassed = 0,
    kVerificationFailed = 1,
    kInputError = 2,
};

/// Dispatches one verb (eval, verify, atoms, walls, chi, reconstruct).
/// `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mwc::cli
