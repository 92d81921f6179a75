#pragma once

namespace twisted {

inline constexpr const char* kVersion = "0.1.0";

} // namespace twisted
