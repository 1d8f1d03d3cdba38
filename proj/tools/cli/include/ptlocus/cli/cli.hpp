#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptlocus::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2, kNumericalFailure = 3 };

inline constexpr int kSchemaVersion = 1;

/// Runs the ptlocus command line. args excludes the program name. Data goes
/// to out (or to --out files), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptlocus::cli
