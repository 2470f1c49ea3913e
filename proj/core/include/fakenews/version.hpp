#pragma once

namespace fakenews {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fakenews
