#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cosdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFails = 2;
inline constexpr int kExitInconclusive = 3;

/// Runs `cosdyn <args...>`; args excludes the program name. Primary output
/// goes to --out when given, otherwise to `out`; diagnostics go to `err`.
///
/// Exit codes: simulate/example 0 on success; check 0 HOLDS, 2 FAILS,
/// 3 INCONCLUSIVE; witness 0 when a stable N exists, 2 otherwise; 1 for any
/// load, validation or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosdyn::cli
