#pragma once

namespace ontoscope {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ontoscope
