#pragma once

#include <string>
#include <string_view>

#include "alphacent/numeric.hpp"

namespace alphacent {

/// Numeric CSV cell: shortest round-trip decimal, '.' decimal point,
/// infinities as `inf`/`-inf`.
inline std::string csv_number(double x) { return number_to_string(x); }

/// Text CSV cell with minimal RFC 4180 quoting.
inline std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

/// Missing-due-to-error cell.
inline constexpr const char* kCsvNA = "NA";

} // namespace alphacent
