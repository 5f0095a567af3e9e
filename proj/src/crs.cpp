#include "geordf/crs.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "geordf/errors.hpp"
#include "geordf/wkt.hpp"

namespace geordf {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Quantities shared between the forward and inverse mappings.
struct LccDerived {
    double e;     // first eccentricity
    double n;     // cone constant
    double af;    // a * F
    double r0;    // radius of the parallel through the false origin
    double lam0;  // origin longitude, radians
};

double iso_t(double phi, double e) {
    double esin = e * std::sin(phi);
    return std::tan(std::numbers::pi / 4.0 - phi / 2.0) /
           std::pow((1.0 - esin) / (1.0 + esin), e / 2.0);
}

double parallel_m(double phi, double e) {
    double s = std::sin(phi);
    return std::cos(phi) / std::sqrt(1.0 - e * e * s * s);
}

LccDerived derive(const LccParams& p) {
    double f = 1.0 / p.ellipsoid.inverse_flattening;
    double e = std::sqrt(f * (2.0 - f));
    double phi1 = p.std_parallel_1 * kDegToRad;
    double phi2 = p.std_parallel_2 * kDegToRad;
    double phi0 = p.lat_origin * kDegToRad;
    double m1 = parallel_m(phi1, e);
    double m2 = parallel_m(phi2, e);
    double t1 = iso_t(phi1, e);
    double t2 = iso_t(phi2, e);
    double n = (std::log(m1) - std::log(m2)) / (std::log(t1) - std::log(t2));
    double big_f = m1 / (n * std::pow(t1, n));
    LccDerived d;
    d.e = e;
    d.n = n;
    d.af = p.ellipsoid.semi_major_a * big_f;
    d.r0 = d.af * std::pow(iso_t(phi0, e), n);
    d.lam0 = p.lon_origin * kDegToRad;
    return d;
}

}  // namespace

ProjectedPoint lcc_forward(double lon, double lat, const LccParams& p) {
    if (!(std::abs(lat) < 90.0)) {
        throw OutOfDomain("latitude " + format_double(lat) + " is outside (-90, 90)");
    }
    LccDerived d = derive(p);
    double r = d.af * std::pow(iso_t(lat * kDegToRad, d.e), d.n);
    double theta = d.n * (lon * kDegToRad - d.lam0);
    return {p.false_easting + r * std::sin(theta),
            p.false_northing + d.r0 - r * std::cos(theta)};
}

GeographicPoint lcc_inverse(double easting, double northing, const LccParams& p) {
    LccDerived d = derive(p);
    double de = easting - p.false_easting;
    double dn = d.r0 - (northing - p.false_northing);
    double r = std::hypot(de, dn);
    double theta;
    if (d.n < 0.0) {
        r = -r;
        theta = std::atan2(-de, -dn);
    } else {
        theta = std::atan2(de, dn);
    }
    double lam = theta / d.n + d.lam0;
    double t = std::pow(r / d.af, 1.0 / d.n);
    double phi = std::numbers::pi / 2.0 - 2.0 * std::atan(t);
    bool converged = false;
    for (int i = 0; i < 25; ++i) {
        double esin = d.e * std::sin(phi);
        double next = std::numbers::pi / 2.0 -
                      2.0 * std::atan(t * std::pow((1.0 - esin) / (1.0 + esin), d.e / 2.0));
        if (std::abs(next - phi) < 1e-12) {
            phi = next;
            converged = true;
            break;
        }
        phi = next;
    }
    if (!converged) {
        throw NoConvergence("latitude iteration did not converge for (" +
                            format_double(easting) + ", " + format_double(northing) + ")");
    }
    return {lam / kDegToRad, phi / kDegToRad};
}

std::string crs_uri(const CrsId& c) {
    if (c.uri.empty()) throw UnsupportedCrs(c.authority + ":" + c.code);
    return c.uri;
}

namespace {

std::string normalize_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (c == '-' || c == '_' || c == ' ') continue;
        out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

LccParams lambert93_params() {
    LccParams p;
    p.ellipsoid = {6378137.0, 298.257222101};  // GRS 1980
    p.lat_origin = 46.5;
    p.lon_origin = 3.0;
    p.std_parallel_1 = 44.0;
    p.std_parallel_2 = 49.0;
    p.false_easting = 700000.0;
    p.false_northing = 6600000.0;
    return p;
}

}  // namespace

CrsRegistry::CrsRegistry() {
    Entry wgs;
    wgs.id = {"IGNF", "WGS84GDD", CrsKind::geographic, "http://data.ign.fr/id/ignf/crs/WGS84GDD"};
    wgs.aliases = {"WGS84GDD", "WGS84", "WGS1984", "EPSG:4326", "4326", "CRS84"};
    entries_.push_back(std::move(wgs));

    Entry l93;
    l93.id = {"IGNF", "LAMB93", CrsKind::projected, "http://data.ign.fr/id/ignf/crs/LAMB93"};
    l93.lcc = lambert93_params();
    l93.aliases = {"LAMB93", "LAMBERT93", "RGF93LAMBERT93", "RGF93", "EPSG:2154", "2154"};
    entries_.push_back(std::move(l93));
}

const CrsId& CrsRegistry::wgs84() const {
    return entries_[0].id;
}

const CrsId& CrsRegistry::lambert93() const {
    return entries_[1].id;
}

const CrsRegistry::Entry* CrsRegistry::find_entry(std::string_view name) const {
    std::string key = normalize_name(name);
    if (key.empty()) return nullptr;
    for (const auto& e : entries_) {
        if (normalize_name(e.id.code) == key ||
            normalize_name(e.id.authority + ":" + e.id.code) == key) {
            return &e;
        }
        for (const auto& a : e.aliases) {
            if (normalize_name(a) == key) return &e;
        }
    }
    return nullptr;
}

const CrsRegistry::Entry* CrsRegistry::entry_for(const CrsId& c) const {
    for (const auto& e : entries_) {
        if (e.id == c) return &e;
    }
    return nullptr;
}

std::optional<CrsId> CrsRegistry::find(std::string_view name) const {
    const Entry* e = find_entry(name);
    if (!e) return std::nullopt;
    return e->id;
}

const LccParams* CrsRegistry::projection(const CrsId& c) const {
    const Entry* e = entry_for(c);
    if (!e || !e->lcc) return nullptr;
    return &*e->lcc;
}

void CrsRegistry::load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open CRS config: " + path);
    std::string line;
    std::size_t offset = 0;
    Entry* current = nullptr;
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t\r");
        std::size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        std::size_t line_offset = offset;
        offset += line.size() + 1;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3) {
                throw ParseError("malformed section header: " + t, line_offset);
            }
            std::string code = trim(t.substr(1, t.size() - 2));
            Entry e;
            e.id.authority = "LOCAL";
            e.id.code = code;
            e.id.kind = CrsKind::projected;
            e.lcc = LccParams{};
            e.aliases = {code};
            entries_.push_back(std::move(e));
            current = &entries_.back();
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos || !current) {
            throw ParseError("expected 'key = value' inside a [section]: " + t, line_offset);
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        auto numeric = [&]() {
            try {
                return std::stod(value);
            } catch (const std::exception&) {
                throw ParseError("non-numeric value for " + key + ": " + value, line_offset);
            }
        };
        if (key == "uri") current->id.uri = value;
        else if (key == "authority") current->id.authority = value;
        else if (key == "alias") current->aliases.push_back(value);
        else if (key == "kind") {
            if (value == "geographic") {
                current->id.kind = CrsKind::geographic;
                current->lcc.reset();
            } else if (value == "projected") {
                current->id.kind = CrsKind::projected;
                if (!current->lcc) current->lcc = LccParams{};
            } else {
                throw ParseError("kind must be geographic or projected: " + value, line_offset);
            }
        } else if (current->lcc) {
            LccParams& p = *current->lcc;
            if (key == "ellipsoid_a") p.ellipsoid.semi_major_a = numeric();
            else if (key == "inverse_flattening") p.ellipsoid.inverse_flattening = numeric();
            else if (key == "lat_origin") p.lat_origin = numeric();
            else if (key == "lon_origin") p.lon_origin = numeric();
            else if (key == "std_parallel_1") p.std_parallel_1 = numeric();
            else if (key == "std_parallel_2") p.std_parallel_2 = numeric();
            else if (key == "false_easting") p.false_easting = numeric();
            else if (key == "false_northing") p.false_northing = numeric();
            else throw ParseError("unknown key: " + key, line_offset);
        } else {
            throw ParseError("unknown key: " + key, line_offset);
        }
    }
}

CrsId CrsRegistry::parse_prj(std::string_view text) const {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) throw ParseError("empty .prj content", 0);
    std::string upper;
    upper.reserve(text.size());
    for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

    bool geographic = upper.compare(start, 7, "GEOGCS[") == 0 ||
                      upper.compare(start, 8, "GEOGCRS[") == 0;
    bool projected = upper.compare(start, 7, "PROJCS[") == 0 ||
                     upper.compare(start, 8, "PROJCRS[") == 0;
    if (!geographic && !projected) {
        throw ParseError("not a WKT CRS definition (expected GEOGCS[...] or PROJCS[...])", start);
    }

    std::size_t q1 = text.find('"', start);
    std::size_t q2 = q1 == std::string_view::npos ? q1 : text.find('"', q1 + 1);
    if (q2 == std::string_view::npos) {
        throw ParseError("missing quoted CRS name", q1 == std::string_view::npos ? start : q1);
    }
    std::string name(text.substr(q1 + 1, q2 - q1 - 1));
    std::string norm = normalize_name(name);

    if (geographic) {
        if (norm.find("WGS") != std::string::npos && norm.find("84") != std::string::npos) {
            return wgs84();
        }
        throw UnsupportedCrs(name);
    }

    // Projected: match by name, then by projection keyword + standard parallels.
    if (norm.find("LAMBERT") != std::string::npos && norm.find("93") != std::string::npos) {
        return lambert93();
    }
    for (const auto& e : entries_) {
        for (const auto& a : e.aliases) {
            if (!a.empty() && norm.find(normalize_name(a)) != std::string::npos) return e.id;
        }
    }
    std::string unorm = normalize_name(upper);
    if (unorm.find("LAMBERTCONFORMALCONIC") != std::string::npos &&
        unorm.find("STANDARDPARALLEL1\",44") != std::string::npos &&
        unorm.find("STANDARDPARALLEL2\",49") != std::string::npos) {
        return lambert93();
    }
    throw UnsupportedCrs(name);
}

Geometry CrsRegistry::transform(const Geometry& g, const CrsId& source, const CrsId& target) const {
    if (source == target) return g;
    const Entry* src = entry_for(source);
    const Entry* dst = entry_for(target);
    if (!src || !dst) {
        throw UnsupportedTransformation(source.authority + ":" + source.code,
                                        target.authority + ":" + target.code);
    }
    // Route through the shared geographic base; the registry treats all
    // geographic entries as coincident (no datum shift).
    auto step = [&](const Coordinate& c) {
        Coordinate geo = c;
        if (src->lcc) {
            GeographicPoint p = lcc_inverse(c.x, c.y, *src->lcc);
            geo = {p.lon, p.lat};
        }
        if (dst->lcc) {
            ProjectedPoint p = lcc_forward(geo.x, geo.y, *dst->lcc);
            return Coordinate{p.easting, p.northing};
        }
        return geo;
    };
    return map_coordinates(g, step);
}

}  // namespace geordf
