#pragma once

namespace qdt {

inline constexpr const char* kToolName = "qdt";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qdt
