#pragma once

namespace sbflow {

inline constexpr const char* kVersion = "0.1.0";

} // namespace sbflow
