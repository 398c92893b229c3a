#pragma once

// qcorr command-line front end. `run` does everything main() does, with the
// streams injected so the commands can be tested in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace qcorr::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcorr::cli
