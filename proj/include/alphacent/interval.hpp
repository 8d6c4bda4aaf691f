#pragma once

#include <cmath>
#include <limits>

namespace alphacent {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval over the extended reals; either endpoint may be infinite.
struct ExtendedInterval {
    double lo = -kInf;
    double hi = kInf;

    static constexpr ExtendedInterval whole() { return {-kInf, kInf}; }

    bool contains(double x) const { return lo <= x && x <= hi; }
};

inline bool operator==(const ExtendedInterval& a, const ExtendedInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

/// hi - lo; infinite whenever either endpoint is infinite.
inline double interval_length(const ExtendedInterval& i) {
    if (std::isinf(i.lo) || std::isinf(i.hi)) return kInf;
    return i.hi - i.lo;
}

} // namespace alphacent
