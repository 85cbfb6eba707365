#pragma once

namespace wlcull {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wlcull
