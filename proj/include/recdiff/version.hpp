#pragma once

namespace recdiff {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace recdiff
