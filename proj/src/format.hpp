#pragma once

#include <cstdio>
#include <string>

namespace storyfear {

// 17 significant digits: enough to round-trip any double exactly.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace storyfear
