#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace annulus::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitGuard = 3;

/// Runs one command line (args[0] is the program name). Results go to
/// `--out` when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace annulus::cli
