#pragma once

#include <string>

#include "cosdyn/conditions.hpp"
#include "cosdyn/witness.hpp"

namespace cosdyn {

/// 17 significant digits ("%.17g"), so every double
/// round-trips and output is reproducible byte for byte.
std::string format_number(double x);

std::string to_json(const CorollaryReport& report);
std::string to_json(const TheoremReport& report);
std::string to_json(const WitnessReport& report);
std::string to_json(const ScanResult& scan);

/// Columns n, value_a, value_b, value_c.
std::string to_csv(const CorollaryReport& report);
/// Columns n, lambda, dist_phi, dist_target, success. Degenerate indices
/// leave the numeric fields empty.
std::string to_csv(const ScanResult& scan);

}  // namespace cosdyn
