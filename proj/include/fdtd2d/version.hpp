#pragma once

namespace fdtd2d {

inline constexpr const char* k_version = "0.1.0";

}  // namespace fdtd2d
