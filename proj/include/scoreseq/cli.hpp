#pragma once

#include <iosfwd>

namespace scoreseq {

// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerification = 2 };

// Runs the scoreseq command line with argv[0] as program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scoreseq
