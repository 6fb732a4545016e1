#pragma once

namespace hfspan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hfspan
