#pragma once

#include <cstdio>
#include <string>

namespace cfm {

// Canonical numeric text for CSV output: 17 significant digits, enough for
// an IEEE double to round-trip exactly.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace cfm
