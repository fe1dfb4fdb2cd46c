#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trinom::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotPermutation = 1;  // also: some gcd identity failed
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

/// Runs one command line (args excludes the program name). All output goes
/// to out/err so tests can drive it in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trinom::cli
