#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isocover {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitRefuted = 1, kExitUsage = 2 };

/// Runs the tool on `args` (args[0] is the program name) and returns the exit code.
/// Kept apart from main() so tests can drive it in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace isocover
