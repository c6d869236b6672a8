// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.

#ifndef LTLNAV_UTIL_TEXT_HPP
#define LTLNAV_UTIL_TEXT_HPP

#include <cstdio>
#include <string>

namespace ltlnav {

// Fixed 6-decimal formatting, locale independent. All exported traces and
// event logs go through this so re-exports are byte-identical.
inline std::string fmt_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

}  // namespace ltlnav

#endif  // LTLNAV_UTIL_TEXT_HPP
