#pragma once

#include <cstdio>
#include <string>

namespace marsnet {

// All numeric report output goes through this: 6 significant digits, so
// repeated runs of one scenario are byte-identical.
inline std::string fmt_sig(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

}  // namespace marsnet
