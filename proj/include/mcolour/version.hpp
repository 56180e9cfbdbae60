#pragma once

namespace mcolour {

inline constexpr const char* kToolName = "mcolour";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace mcolour
