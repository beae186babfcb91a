#pragma once

#include <ostream>

namespace kostant {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // internal or configuration error, cache verification failure
  kExitBadFlags = 2,
  kExitSizeCap = 3,
  kExitGoldenMismatch = 4,
};

/// Quotients above this many elements need --allow-large.
inline constexpr unsigned long long kLargeQuotient = 50000;

/// Entry point of the `kostant` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kostant
