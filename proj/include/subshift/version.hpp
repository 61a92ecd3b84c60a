#pragma once

namespace subshift {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace subshift
