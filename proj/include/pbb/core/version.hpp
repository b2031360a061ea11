#pragma once

namespace pbb {

inline constexpr const char* kToolName = "pbb";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace pbb
