#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthocomp::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    /// A verification ran but its expected outcome was not observed.
    kCheckFailed = 1,
    kValidationError = 2,
    kIoError = 3,
};

/// Runs one command line (args excludes the program name). Everything the
/// command prints goes to `out`, diagnostics to `err`. Never throws.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace orthocomp::cli
