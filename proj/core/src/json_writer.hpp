#pragma once

// Internal: canonical JSON emission shared by file serializers and reports.

#include <string>

#include "json.hpp"

namespace cosdyn::detail {

using Json = nlohmann::ordered_json;

/// Two-space indented output. Arrays holding only scalars are written on one
/// line; doubles use 17 significant digits, non-finite doubles become null.
std::string dump_canonical(const Json& j);

}  // namespace cosdyn::detail
