#pragma once

namespace coord {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace coord
