#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphacent/interval.hpp"

namespace alphacent {

/// y = slope * x + intercept; the tag is an opaque caller identifier
/// (node index for centrality lines) reported back with the extrema.
struct Line {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t tag = 0;
};

enum class LineRelation { intersecting, parallel, coincident };

struct PairwiseIntersection {
    LineRelation relation;
    double x; // defined only when intersecting
};

struct ExtremaOptions {
    /// Slopes closer than this are treated as equal (parallel). The default
    /// of 0 means exact floating-point equality: slopes derived from
    /// identical inputs are bit-identical, and anything larger would
    /// fabricate parallels. A positive tolerance snaps each cluster of
    /// nearby slopes (single linkage on the sorted slopes) to the cluster
    /// minimum before the analysis.
    double slope_tolerance = 0.0;
};

/// Leftmost and rightmost abscissas over all pairwise single-point
/// intersections, with the tags of a pair attaining each one. When no pair
/// intersects, leftmost/rightmost keep their -inf/+inf conventions.
struct ExtremaResult {
    double leftmost = -kInf;
    double rightmost = kInf;
    bool has_intersection = false;
    std::pair<std::size_t, std::size_t> leftmost_pair{0, 0};
    std::pair<std::size_t, std::size_t> rightmost_pair{0, 0};
};

inline PairwiseIntersection pairwise_intersection(const Line& l1, const Line& l2,
                                                  double slope_tolerance = 0.0) {
    if (l1.slope == l2.slope && l1.intercept == l2.intercept)
        return {LineRelation::coincident, 0.0};
    if (std::abs(l1.slope - l2.slope) <= slope_tolerance || l1.slope == l2.slope)
        return {LineRelation::parallel, 0.0};
    return {LineRelation::intersecting, (l2.intercept - l1.intercept) / (l1.slope - l2.slope)};
}

namespace detail {

inline void reject_nonfinite(std::span<const Line> lines) {
    for (const Line& l : lines)
        if (!std::isfinite(l.slope) || !std::isfinite(l.intercept))
            throw std::invalid_argument("line coefficients must be finite (tag " +
                                        std::to_string(l.tag) + ")");
}

/// Exact duplicate (slope, intercept) pairs violate the precondition;
/// deduplication is the caller's job.
inline void reject_coincident(std::span<const Line> lines) {
    std::vector<std::size_t> order(lines.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lines[a].slope != lines[b].slope) return lines[a].slope < lines[b].slope;
        return lines[a].intercept < lines[b].intercept;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Line& a = lines[order[i - 1]];
        const Line& b = lines[order[i]];
        if (a.slope == b.slope && a.intercept == b.intercept)
            throw std::invalid_argument("coincident lines (tags " + std::to_string(a.tag) +
                                        " and " + std::to_string(b.tag) + ")");
    }
}

/// Single-linkage clustering of slopes: runs of consecutive sorted slopes
/// with gaps <= tolerance collapse onto the cluster minimum. With the
/// default tolerance of 0 the input is returned untouched.
inline std::vector<Line> snap_slopes(std::span<const Line> lines, double tolerance) {
    std::vector<Line> out(lines.begin(), lines.end());
    if (tolerance <= 0.0) return out;
    std::vector<std::size_t> order(out.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out[a].slope < out[b].slope; });
    std::size_t cluster_start = 0;
    for (std::size_t i = 1; i <= order.size(); ++i) {
        const bool new_cluster =
            i == order.size() || out[order[i]].slope - out[order[i - 1]].slope > tolerance;
        if (new_cluster) {
            const double representative = out[order[cluster_start]].slope;
            for (std::size_t j = cluster_start; j < i; ++j) out[order[j]].slope = representative;
            cluster_start = i;
        }
    }
    return out;
}

struct PassResult {
    bool found = false;
    double x = 0.0;
    std::pair<std::size_t, std::size_t> pair{0, 0};
};

/// The inductive leftmost pass.
///
/// Preamble: any pair of unequal slopes yields an anchor crossing at x = r;
/// if none exists every pair is parallel and there is no intersection at
/// all. Every crossing of interest then lies left of r + 1, so the lines
/// are processed in ascending height at r + 1 (ties broken by ascending
/// slope, so that lines meeting exactly at r + 1 are seen by the steeper
/// one's predecessor query).
///
/// Scan invariant: after processing a prefix, x is the leftmost crossing of
/// any pair in the prefix. For the incoming line only earlier lines of
/// strictly lower slope can improve it, and among those only the steepest
/// can — any crossing with a shallower line that lies even further left is
/// dominated by a crossing between two earlier lines, already accounted
/// for. Per distinct slope it suffices to keep the line of least intercept:
/// against a fixed steeper line, the least intercept gives the leftmost
/// crossing. The ordered slope index makes the predecessor query
/// logarithmic, for O(n log n) overall.
inline PassResult leftmost_pass(std::span<const Line> lines) {
    PassResult result;
    if (lines.size() < 2) return result;

    const double first_slope = lines[0].slope;
    double anchor = 0.0;
    bool anchored = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].slope != first_slope) {
            anchor = (lines[i].intercept - lines[0].intercept) / (first_slope - lines[i].slope);
            anchored = true;
            break;
        }
    }
    if (!anchored) return result;

    std::vector<std::size_t> order(lines.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> height(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        height[i] = lines[i].slope * (anchor + 1.0) + lines[i].intercept;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (height[a] != height[b]) return height[a] < height[b];
        return lines[a].slope < lines[b].slope;
    });

    struct SlopeEntry {
        double intercept;
        std::size_t tag;
    };
    std::map<double, SlopeEntry> index;
    for (std::size_t idx : order) {
        const Line& line = lines[idx];
        auto it = index.lower_bound(line.slope);
        if (it != index.begin()) {
            --it; // steepest slope strictly below ours
            const double x = (it->second.intercept - line.intercept) / (line.slope - it->first);
            if (!result.found || x < result.x) {
                result.found = true;
                result.x = x;
                result.pair = {it->second.tag, line.tag};
            }
        }
        auto [pos, inserted] = index.try_emplace(line.slope, SlopeEntry{line.intercept, line.tag});
        if (!inserted && line.intercept < pos->second.intercept)
            pos->second = {line.intercept, line.tag};
    }
    return result;
}

inline std::vector<Line> negate_slopes(std::span<const Line> lines) {
    std::vector<Line> out(lines.begin(), lines.end());
    for (Line& l : out) l.slope = -l.slope;
    return out;
}

inline std::vector<Line> prepare(std::span<const Line> lines, const ExtremaOptions& options) {
    if (lines.empty())
        throw std::invalid_argument("at least one line is required");
    reject_nonfinite(lines);
    reject_coincident(lines);
    return snap_slopes(lines, options.slope_tolerance);
}

} // namespace detail

/// O(n^2) scan of every pair; the reference implementation the fast passes
/// are validated against.
inline ExtremaResult brute_force_extrema(std::span<const Line> lines,
                                         const ExtremaOptions& options = {}) {
    const std::vector<Line> prepared = detail::prepare(lines, options);
    ExtremaResult result;
    for (std::size_t i = 0; i < prepared.size(); ++i) {
        for (std::size_t j = i + 1; j < prepared.size(); ++j) {
            const auto hit = pairwise_intersection(prepared[i], prepared[j]);
            if (hit.relation != LineRelation::intersecting) continue;
            if (!result.has_intersection || hit.x < result.leftmost) {
                result.leftmost = hit.x;
                result.leftmost_pair = {prepared[i].tag, prepared[j].tag};
            }
            if (!result.has_intersection || hit.x > result.rightmost) {
                result.rightmost = hit.x;
                result.rightmost_pair = {prepared[i].tag, prepared[j].tag};
            }
            result.has_intersection = true;
        }
    }
    if (!result.has_intersection) {
        result.leftmost = -kInf;
        result.rightmost = kInf;
    }
    return result;
}

/// Leftmost and rightmost pairwise intersections in O(n log n). The
/// rightmost side reuses the leftmost pass on the slope-negated family:
/// crossings of {(-a_i, b_i)} mirror those of the input at -x.
inline ExtremaResult extrema(std::span<const Line> lines, const ExtremaOptions& options = {}) {
    const std::vector<Line> prepared = detail::prepare(lines, options);
    ExtremaResult result;
    const auto left = detail::leftmost_pass(prepared);
    if (!left.found) return result;
    const auto right = detail::leftmost_pass(detail::negate_slopes(prepared));
    result.has_intersection = true;
    result.leftmost = left.x;
    result.leftmost_pair = left.pair;
    result.rightmost = -right.x;
    result.rightmost_pair = right.pair;
    return result;
}

/// Minimum abscissa over all pairwise intersections; -inf when every pair
/// is parallel.
inline double leftmost_intersection(std::span<const Line> lines,
                                    const ExtremaOptions& options = {}) {
    const std::vector<Line> prepared = detail::prepare(lines, options);
    const auto left = detail::leftmost_pass(prepared);
    return left.found ? left.x : -kInf;
}

/// Maximum abscissa over all pairwise intersections; +inf when every pair
/// is parallel. Defined as the negated leftmost of the slope-negated lines.
inline double rightmost_intersection(std::span<const Line> lines,
                                     const ExtremaOptions& options = {}) {
    const std::vector<Line> prepared = detail::prepare(lines, options);
    const auto left = detail::leftmost_pass(detail::negate_slopes(prepared));
    return left.found ? -left.x : kInf;
}

} // namespace alphacent
