#pragma once

namespace gon {

inline constexpr const char* kToolName = "gon";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace gon
