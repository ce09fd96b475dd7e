#pragma once

namespace hilbert {
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";
}  // namespace hilbert
