#ifndef EVAC_FORMAT_HPP
#define EVAC_FORMAT_HPP

#include <cstdio>
#include <string>

namespace evac {

// Shortest round-trippable %g rendering at the given significant digits.
inline std::string fmt_g(double v, int sig_digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, v);
    return buf;
}

}  // namespace evac

#endif
