#pragma once

namespace gencase {

inline constexpr const char* kToolName = "gencase";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace gencase
