#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "alphacent/errors.hpp"

namespace alphacent {

/// Shortest round-trip decimal text for a double, locale-independent.
/// Infinities render as "inf"/"-inf".
inline std::string number_to_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

/// base^exponent with runtime representability checks. The base must be
/// strictly positive. Results that overflow to infinity, underflow to zero,
/// or land in the subnormal range are rejected: a static safe range for the
/// exponent is necessary but not sufficient, so every power is checked.
/// Exponents 0 and 1 short-circuit so that benchmark values are exact.
inline double checked_pow(double base, double exponent) {
    if (exponent == 0.0) return 1.0;
    if (exponent == 1.0) return base;
    const double value = std::pow(base, exponent);
    if (!std::isfinite(value) || value == 0.0 || std::fpclassify(value) == FP_SUBNORMAL) {
        throw computability_error("power not representable in binary64: base=" +
                                  number_to_string(base) +
                                  " exponent=" + number_to_string(exponent));
    }
    return value;
}

} // namespace alphacent
