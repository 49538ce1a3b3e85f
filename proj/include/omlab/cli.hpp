#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omlab {

/// Exit codes: 0 valid / hypothesis holds / witness found, 1 a mathematical
/// failure (axiom, hypothesis, counterexample) with its report, 2 a usage,
/// parse or other operational error.
enum ExitCode : int { kExitOk = 0, kExitViolated = 1, kExitUsage = 2 };

/// Runs one command; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omlab
