#pragma once

namespace remo {

inline constexpr const char* kVersionString = "remo 0.1.0";

}  // namespace remo
