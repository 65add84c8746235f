#pragma once

#include <ostream>

namespace diamonds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Default tolerance override for dual-route agreement checks.
inline constexpr const char* kToleranceEnv = "DIAMONDS_TOL";

/// Parses argv, runs one subcommand, writes data to out and diagnostics to
/// err. Returns 0 on success, 1 on a computation error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace diamonds::cli
