#pragma once

namespace marsnet {

inline constexpr const char* MARSNET_VERSION = "0.1.0";

}  // namespace marsnet
