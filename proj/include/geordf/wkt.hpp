#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "geordf/geometry.hpp"

namespace geordf {

/// Shortest decimal text that round-trips the binary value; fixed-point with
/// the given digit count when precision is set.
std::string format_double(double v, std::optional<int> precision = std::nullopt);

/// Simple Feature WKT: uppercase tags, "x y" coordinates joined by ", ".
std::string to_wkt(const Geometry& g, std::optional<int> precision = std::nullopt);

/// Parses POINT / LINESTRING / POLYGON / MULTIPOLYGON / MULTIPOINT.
/// Whitespace-tolerant, case-insensitive tags. Z/M dimensions are rejected.
/// Throws ParseError (with byte offset) on malformed input.
Geometry from_wkt(std::string_view text);

}  // namespace geordf
