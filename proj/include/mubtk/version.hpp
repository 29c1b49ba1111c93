#pragma once

namespace mubtk {

inline constexpr const char* kToolName = "mubtool";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace mubtk
