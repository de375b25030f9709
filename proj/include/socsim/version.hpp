#pragma once

namespace socsim {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace socsim
