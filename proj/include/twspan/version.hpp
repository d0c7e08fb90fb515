#pragma once

namespace twspan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace twspan
