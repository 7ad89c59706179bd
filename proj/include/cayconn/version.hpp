#pragma once

#include <string_view>

namespace cayconn {

inline constexpr std::string_view kToolName = "cayconn";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace cayconn
