#pragma once

namespace ldgm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ldgm
