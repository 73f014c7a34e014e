#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobi::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kParameterError = 2,
    kIoError = 3,
    kNumericalError = 4,
};

/// Runs the command line (args excludes the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip form with 17 significant digits, '.' as decimal point.
std::string format_number(double v);

}  // namespace jacobi::cli
