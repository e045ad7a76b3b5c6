#pragma once

namespace pgdual {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pgdual
