#pragma once

namespace superform {

inline constexpr const char* kVersion = "0.1.0";

} // namespace superform
