#pragma once

namespace flatbox {

inline constexpr const char* kToolName = "flatbox";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace flatbox
