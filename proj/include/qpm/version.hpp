#pragma once

namespace qpm {

inline constexpr const char* tool_version = "1.0.0";

}  // namespace qpm
