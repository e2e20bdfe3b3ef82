#pragma once

namespace slopeforge {

inline constexpr const char* kToolName = "slopeforge";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace slopeforge
