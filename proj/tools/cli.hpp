#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simcore {

/// Default truncation for series, scans and verification when -N is absent.
inline constexpr const char* kTruncationEnv = "SIMCORE_TRUNCATION";

/// Runs the command line `args` (program name first). Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simcore
