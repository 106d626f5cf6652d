#pragma once

namespace sbmtest {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace sbmtest
