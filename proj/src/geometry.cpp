#include "geordf/geometry.hpp"

#include <cmath>
#include <limits>

namespace geordf {

namespace {

bool finite_coord(const Coordinate& c) {
    return std::isfinite(c.x) && std::isfinite(c.y);
}

void check_coords(const std::vector<Coordinate>& pts, const std::string& where,
                  ValidationReport& out) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!finite_coord(pts[i])) {
            out.push_back({ViolationKind::non_finite_coordinate,
                           where + ": non-finite coordinate at index " + std::to_string(i)});
        }
    }
}

void check_ring(const LinearRing& r, const std::string& where, ValidationReport& out) {
    check_coords(r.points, where, out);
    if (r.points.size() < 4) {
        out.push_back({ViolationKind::ring_too_short, where + ": ring length < 4"});
        return;
    }
    if (!(r.points.front() == r.points.back())) {
        out.push_back({ViolationKind::ring_not_closed, where + ": ring not closed"});
    }
}

void check_polygon(const Polygon& p, const std::string& where, ValidationReport& out) {
    check_ring(p.exterior, where + " exterior", out);
    for (std::size_t i = 0; i < p.interiors.size(); ++i) {
        check_ring(p.interiors[i], where + " interior " + std::to_string(i), out);
    }
}

}  // namespace

ValidationReport validate(const Geometry& g) {
    ValidationReport out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                if (!finite_coord(v.position)) {
                    out.push_back({ViolationKind::non_finite_coordinate,
                                   "point: non-finite coordinate"});
                }
            } else if constexpr (std::is_same_v<T, LineString>) {
                check_coords(v.points, "linestring", out);
                if (v.points.size() < 2) {
                    out.push_back({ViolationKind::line_too_short, "linestring length < 2"});
                }
            } else if constexpr (std::is_same_v<T, MultiPoint>) {
                check_coords(v.points, "multipoint", out);
                if (v.points.empty()) {
                    out.push_back({ViolationKind::empty_multipoint, "empty multipoint"});
                }
            } else if constexpr (std::is_same_v<T, Polygon>) {
                check_polygon(v, "polygon", out);
            } else {
                if (v.members.empty()) {
                    out.push_back({ViolationKind::empty_multipolygon, "empty multipolygon"});
                }
                for (std::size_t i = 0; i < v.members.size(); ++i) {
                    check_polygon(v.members[i], "polygon " + std::to_string(i), out);
                }
            }
        },
        g);
    return out;
}

bool is_valid(const Geometry& g) {
    return validate(g).empty();
}

Envelope bbox(const Geometry& g) {
    Envelope e{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
               std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for_each_coordinate(g, [&](const Coordinate& c) {
        e.xmin = std::min(e.xmin, c.x);
        e.xmax = std::max(e.xmax, c.x);
        e.ymin = std::min(e.ymin, c.y);
        e.ymax = std::max(e.ymax, c.y);
    });
    return e;
}

int geometry_member_count(const Geometry& g) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MultiPolygon>) {
                return static_cast<int>(v.members.size());
            } else if constexpr (std::is_same_v<T, MultiPoint>) {
                return static_cast<int>(v.points.size());
            } else {
                return 1;
            }
        },
        g);
}

int interior_ring_count(const Geometry& g) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                return static_cast<int>(v.interiors.size());
            } else if constexpr (std::is_same_v<T, MultiPolygon>) {
                int n = 0;
                for (const auto& p : v.members) n += static_cast<int>(p.interiors.size());
                return n;
            } else {
                return 0;
            }
        },
        g);
}

const char* geometry_kind_name(const Geometry& g) {
    return std::visit(
        [](const auto& v) -> const char* {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) return "Point";
            else if constexpr (std::is_same_v<T, LineString>) return "LineString";
            else if constexpr (std::is_same_v<T, Polygon>) return "Polygon";
            else if constexpr (std::is_same_v<T, MultiPolygon>) return "MultiPolygon";
            else return "MultiPoint";
        },
        g);
}

}  // namespace geordf
