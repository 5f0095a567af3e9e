#pragma once

#include <string>
#include <variant>
#include <vector>

namespace geordf {

struct Coordinate {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

struct Point {
    Coordinate position;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Open sequence of at least two vertices.
struct LineString {
    std::vector<Coordinate> points;

    friend bool operator==(const LineString&, const LineString&) = default;
};

/// Closed sequence: at least four vertices, first equal to last.
struct LinearRing {
    std::vector<Coordinate> points;

    friend bool operator==(const LinearRing&, const LinearRing&) = default;
};

struct Polygon {
    LinearRing exterior;
    std::vector<LinearRing> interiors;

    friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct MultiPolygon {
    std::vector<Polygon> members;  // at least one

    friend bool operator==(const MultiPolygon&, const MultiPolygon&) = default;
};

struct MultiPoint {
    std::vector<Coordinate> points;  // at least one

    friend bool operator==(const MultiPoint&, const MultiPoint&) = default;
};

/// 2D Simple Feature geometry. Values are immutable by convention: operations
/// return new geometries and never mutate their inputs.
using Geometry = std::variant<Point, LineString, Polygon, MultiPolygon, MultiPoint>;

struct Envelope {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    bool contains(const Coordinate& c) const {
        return c.x >= xmin && c.x <= xmax && c.y >= ymin && c.y <= ymax;
    }

    friend bool operator==(const Envelope&, const Envelope&) = default;
};

enum class ViolationKind {
    non_finite_coordinate,
    ring_too_short,
    ring_not_closed,
    empty_multipolygon,
    empty_multipoint,
    line_too_short,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

using ValidationReport = std::vector<Violation>;

/// Lists every invariant violation; empty report means valid. Never throws.
ValidationReport validate(const Geometry& g);

bool is_valid(const Geometry& g);

/// Tight min/max envelope over all coordinates. Requires a valid geometry.
Envelope bbox(const Geometry& g);

/// Member count: polygons for a MultiPolygon, points for a MultiPoint,
/// 1 for the single-valued kinds.
int geometry_member_count(const Geometry& g);

/// Total hole count across all polygons; 0 for non-polygonal kinds.
int interior_ring_count(const Geometry& g);

const char* geometry_kind_name(const Geometry& g);

/// Calls fn(const Coordinate&) for every vertex, in storage order.
template <typename Fn>
void for_each_coordinate(const Geometry& g, Fn&& fn) {
    auto ring = [&](const LinearRing& r) {
        for (const auto& c : r.points) fn(c);
    };
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                fn(v.position);
            } else if constexpr (std::is_same_v<T, LineString> || std::is_same_v<T, MultiPoint>) {
                for (const auto& c : v.points) fn(c);
            } else if constexpr (std::is_same_v<T, Polygon>) {
                ring(v.exterior);
                for (const auto& r : v.interiors) ring(r);
            } else {
                for (const auto& p : v.members) {
                    ring(p.exterior);
                    for (const auto& r : p.interiors) ring(r);
                }
            }
        },
        g);
}

/// Structure-preserving coordinate map: same kind, same ring and point counts.
template <typename Fn>
Geometry map_coordinates(const Geometry& g, Fn&& fn) {
    auto map_ring = [&](const LinearRing& r) {
        LinearRing out;
        out.points.reserve(r.points.size());
        for (const auto& c : r.points) out.points.push_back(fn(c));
        return out;
    };
    auto map_polygon = [&](const Polygon& p) {
        Polygon out;
        out.exterior = map_ring(p.exterior);
        out.interiors.reserve(p.interiors.size());
        for (const auto& r : p.interiors) out.interiors.push_back(map_ring(r));
        return out;
    };
    return std::visit(
        [&](const auto& v) -> Geometry {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                return Point{fn(v.position)};
            } else if constexpr (std::is_same_v<T, LineString> || std::is_same_v<T, MultiPoint>) {
                T out;
                out.points.reserve(v.points.size());
                for (const auto& c : v.points) out.points.push_back(fn(c));
                return out;
            } else if constexpr (std::is_same_v<T, Polygon>) {
                return map_polygon(v);
            } else {
                MultiPolygon out;
                out.members.reserve(v.members.size());
                for (const auto& p : v.members) out.members.push_back(map_polygon(p));
                return out;
            }
        },
        g);
}

}  // namespace geordf
