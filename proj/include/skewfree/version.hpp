#pragma once

namespace skewfree {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace skewfree
