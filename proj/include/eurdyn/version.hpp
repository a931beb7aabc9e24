#pragma once

namespace eurdyn {

inline constexpr const char* kVersion = "0.1.0";

} // namespace eurdyn
