#pragma once

namespace ssig {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ssig
