#pragma once

namespace rqte {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rqte
