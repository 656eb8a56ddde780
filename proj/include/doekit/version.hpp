#pragma once

namespace doekit {

inline constexpr const char* kToolName = "doekit";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace doekit
