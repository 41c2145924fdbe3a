#pragma once

namespace walkbound {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace walkbound
