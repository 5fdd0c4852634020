#pragma once

namespace flowspec {

inline constexpr const char* kVersion = "0.1.0";

} // namespace flowspec
