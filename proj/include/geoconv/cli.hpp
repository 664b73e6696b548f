#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoconv::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kOk = 0, kTheoremViolation = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; `in` backs "-" inputs.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace geoconv::cli
