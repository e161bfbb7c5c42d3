#pragma once

#include <ostream>

namespace detlinks {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3, kExitConsistency = 4 };

/// Runs the detlinks command line; everything is written to out and err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace detlinks
