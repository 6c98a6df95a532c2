#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shortdiff {

/// Exit codes: 0 success, 1 bad input or I/O, 2 the mathematics says no
/// (hypothesis failure, failed verification, theorem violation).
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitMath = 2 };

/// Runs the command line (without the program name). Results go to `out`
/// unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shortdiff
