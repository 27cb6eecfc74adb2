#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace b3img {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitExceededBound = 3;

/// Runs one command line (args excludes the program name). Reports go to
/// `out` unless --output redirects them; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace b3img
