#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multitilde::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kInputError = 2,
    kNegative = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`. `in` backs the
/// "-" argument (read standard input).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace multitilde::cli
