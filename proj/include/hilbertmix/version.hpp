#pragma once

namespace hmx {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hmx
