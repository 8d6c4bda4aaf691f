#pragma once

#include <stdexcept>

namespace alphacent {

/// Base class for all data-dependent failures raised by this library.
struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (edge lists, sweep specs).
struct parse_error : graph_error {
    using graph_error::graph_error;
};

/// Structural invariant violations: self-loops, duplicate edges, nonpositive
/// weights, zero-degree nodes in degree measures, disconnected graphs where
/// connectivity is required.
struct validation_error : graph_error {
    using graph_error::graph_error;
};

/// Random generation gave up: connectivity retries or rewiring attempt
/// budget exhausted.
struct generation_error : graph_error {
    using graph_error::graph_error;
};

/// A value left the representable binary64 range (overflow, underflow to
/// zero or a subnormal) while evaluating a measure.
struct computability_error : graph_error {
    using graph_error::graph_error;
};

} // namespace alphacent
