#pragma once

namespace effroth {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace effroth
