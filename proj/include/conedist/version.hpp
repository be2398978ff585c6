#pragma once

namespace conedist {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace conedist
