#pragma once

namespace semicl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace semicl
