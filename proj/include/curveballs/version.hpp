#pragma once

namespace curveballs {

inline constexpr const char* kVersion = "1.0.0";

} // namespace curveballs
