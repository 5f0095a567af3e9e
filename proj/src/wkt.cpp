#include "geordf/wkt.hpp"

#include <cctype>
#include <charconv>
#include <cstring>

#include "geordf/errors.hpp"

namespace geordf {

std::string format_double(double v, std::optional<int> precision) {
    char buf[64];
    std::to_chars_result res = precision
        ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, *precision)
        : std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

void write_coords(std::string& out, const std::vector<Coordinate>& pts,
                  const std::optional<int>& prec) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i != 0) out += ", ";
        out += format_double(pts[i].x, prec);
        out += ' ';
        out += format_double(pts[i].y, prec);
    }
}

void write_polygon_body(std::string& out, const Polygon& p, const std::optional<int>& prec) {
    out += '(';
    write_coords(out, p.exterior.points, prec);
    out += ')';
    for (const auto& hole : p.interiors) {
        out += ",(";
        write_coords(out, hole.points, prec);
        out += ')';
    }
}

}  // namespace

std::string to_wkt(const Geometry& g, std::optional<int> precision) {
    std::string out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Point>) {
                out += "POINT(";
                out += format_double(v.position.x, precision);
                out += ' ';
                out += format_double(v.position.y, precision);
                out += ')';
            } else if constexpr (std::is_same_v<T, LineString>) {
                out += "LINESTRING(";
                write_coords(out, v.points, precision);
                out += ')';
            } else if constexpr (std::is_same_v<T, MultiPoint>) {
                out += "MULTIPOINT(";
                write_coords(out, v.points, precision);
                out += ')';
            } else if constexpr (std::is_same_v<T, Polygon>) {
                out += "POLYGON(";
                write_polygon_body(out, v, precision);
                out += ')';
            } else {
                out += "MULTIPOLYGON(";
                for (std::size_t i = 0; i < v.members.size(); ++i) {
                    if (i != 0) out += ',';
                    out += '(';
                    write_polygon_body(out, v.members[i], precision);
                    out += ')';
                }
                out += ')';
            }
        },
        g);
    return out;
}

namespace {

class WktScanner {
public:
    explicit WktScanner(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    // Case-insensitive keyword match; consumes on success.
    bool match_keyword(std::string_view kw) {
        skip_ws();
        if (pos_ + kw.size() > text_.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) {
            if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
        }
        // Keyword must not continue as a longer identifier.
        std::size_t after = pos_ + kw.size();
        if (after < text_.size() &&
            std::isalpha(static_cast<unsigned char>(text_[after]))) {
            return false;
        }
        pos_ = after;
        return true;
    }

    bool match(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!match(c)) fail(std::string("expected '") + c + "'");
    }

    double parse_number() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        std::size_t digits_from = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                ++pos_;
            } else if ((c == 'e' || c == 'E') && pos_ > digits_from) {
                ++pos_;
                if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            } else {
                break;
            }
        }
        if (pos_ == digits_from) {
            pos_ = start;
            fail("expected a number");
        }
        const char* first = text_.data() + start;
        if (text_[start] == '+') ++first;  // from_chars takes no leading plus
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
        if (ec != std::errc{} || ptr != text_.data() + pos_) {
            pos_ = start;
            fail("malformed number");
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Coordinate parse_coordinate(WktScanner& s) {
    Coordinate c;
    c.x = s.parse_number();
    c.y = s.parse_number();
    s.skip_ws();
    return c;
}

std::vector<Coordinate> parse_coord_list(WktScanner& s) {
    s.expect('(');
    std::vector<Coordinate> pts;
    do {
        // Tolerate per-point parentheses (common MULTIPOINT form).
        bool wrapped = s.match('(');
        pts.push_back(parse_coordinate(s));
        if (wrapped) s.expect(')');
    } while (s.match(','));
    s.expect(')');
    return pts;
}

LinearRing parse_ring(WktScanner& s) {
    std::size_t at = s.pos();
    LinearRing r{parse_coord_list(s)};
    if (r.points.size() < 4 || !(r.points.front() == r.points.back())) {
        throw ParseError("ring must hold >= 4 points and close on its first point", at);
    }
    return r;
}

Polygon parse_polygon_body(WktScanner& s) {
    s.expect('(');
    Polygon p;
    p.exterior = parse_ring(s);
    while (s.match(',')) p.interiors.push_back(parse_ring(s));
    s.expect(')');
    return p;
}

void reject_zm(WktScanner& s) {
    if (s.match_keyword("ZM") || s.match_keyword("Z") || s.match_keyword("M")) {
        s.fail("Z/M dimensions are not supported (2D only)");
    }
    if (s.match_keyword("EMPTY")) s.fail("EMPTY geometries are not supported");
}

}  // namespace

Geometry from_wkt(std::string_view text) {
    WktScanner s(text);
    Geometry g;
    if (s.match_keyword("POINT")) {
        reject_zm(s);
        s.expect('(');
        Point p{parse_coordinate(s)};
        if (!s.match(')')) s.fail("a point holds exactly one 2D coordinate");
        g = p;
    } else if (s.match_keyword("LINESTRING")) {
        reject_zm(s);
        std::size_t at = s.pos();
        LineString l{parse_coord_list(s)};
        if (l.points.size() < 2) throw ParseError("linestring needs >= 2 points", at);
        g = l;
    } else if (s.match_keyword("POLYGON")) {
        reject_zm(s);
        g = parse_polygon_body(s);
    } else if (s.match_keyword("MULTIPOLYGON")) {
        reject_zm(s);
        s.expect('(');
        MultiPolygon m;
        do {
            m.members.push_back(parse_polygon_body(s));
        } while (s.match(','));
        s.expect(')');
        g = m;
    } else if (s.match_keyword("MULTIPOINT")) {
        reject_zm(s);
        g = MultiPoint{parse_coord_list(s)};
    } else {
        s.fail("expected a geometry tag (POINT, LINESTRING, POLYGON, MULTIPOLYGON, MULTIPOINT)");
    }
    if (!s.at_end()) s.fail("trailing content after geometry");
    return g;
}

}  // namespace geordf
