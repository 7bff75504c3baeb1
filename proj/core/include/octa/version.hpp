#pragma once

namespace octa {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace octa
