#pragma once

namespace dsbent {

inline constexpr const char* kToolName = "dsbent";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace dsbent
