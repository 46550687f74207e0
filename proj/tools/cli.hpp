#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bellseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) and returns the process
/// exit code: 0 on success, 1 when a verification found a mismatch, 2 on a
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for a finished verification with `mismatches` failures.
constexpr int verification_exit_code(std::size_t mismatches) { return mismatches == 0 ? kExitOk : kExitMismatch; }

}  // namespace bellseq::cli
