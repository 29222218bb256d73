#pragma once

namespace maxkin {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace maxkin
