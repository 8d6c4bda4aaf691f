#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "alphacent/interval.hpp"

namespace alphacent {

/// Median and interquartile range; preferred over mean/std because interval
/// lengths can be infinite and order statistics handle that gracefully.
struct SummaryStat {
    double median = 0.0;
    double iqr = 0.0;
    std::size_t count = 0;
};

namespace detail {

/// Quantile by linear interpolation between closest ranks (the inclusive
/// method). Infinities sort above/below every finite value; a quantile that
/// lands on an infinite sample is that infinity.
inline double quantile_sorted(std::span<const double> sorted, double fraction) {
    const double position = fraction * static_cast<double>(sorted.size() - 1);
    const auto lower = static_cast<std::size_t>(position);
    const double t = position - static_cast<double>(lower);
    if (t == 0.0) return sorted[lower];
    const double lo = sorted[lower];
    const double hi = sorted[lower + 1];
    if (lo == hi) return lo;
    if (lo == -kInf && hi == kInf) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(hi)) return hi;
    if (std::isinf(lo)) return lo;
    return lo + t * (hi - lo);
}

} // namespace detail

inline SummaryStat summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize needs at least one value");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    SummaryStat stat;
    stat.count = sorted.size();
    stat.median = detail::quantile_sorted(sorted, 0.5);
    const double q1 = detail::quantile_sorted(sorted, 0.25);
    const double q3 = detail::quantile_sorted(sorted, 0.75);
    stat.iqr = (std::isinf(q1) || std::isinf(q3)) ? kInf : q3 - q1;
    return stat;
}

/// Population mean and standard deviation, reported alongside median/IQR so
/// both summaries of a sweep can be compared.
inline std::pair<double, double> mean_std(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean_std needs at least one value");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double variance = 0.0;
    for (double v : values) {
        const double d = v - mean;
        variance += d * d;
    }
    variance /= static_cast<double>(values.size());
    return {mean, std::sqrt(variance)};
}

} // namespace alphacent
