#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geordf/geometry.hpp"

namespace geordf {

enum class CrsKind { geographic, projected };

struct EllipsoidParams {
    double semi_major_a = 0.0;        // meters
    double inverse_flattening = 0.0;  // dimensionless
};

/// Lambert Conformal Conic, two standard parallels. Angles in degrees,
/// lengths in the ellipsoid's linear unit.
struct LccParams {
    EllipsoidParams ellipsoid;
    double lat_origin = 0.0;
    double lon_origin = 0.0;
    double std_parallel_1 = 0.0;
    double std_parallel_2 = 0.0;
    double false_easting = 0.0;
    double false_northing = 0.0;
};

struct CrsId {
    std::string authority;
    std::string code;
    CrsKind kind = CrsKind::geographic;
    std::string uri;

    friend bool operator==(const CrsId& a, const CrsId& b) {
        return a.authority == b.authority && a.code == b.code;
    }
};

struct ProjectedPoint {
    double easting = 0.0;
    double northing = 0.0;
};

struct GeographicPoint {
    double lon = 0.0;
    double lat = 0.0;
};

/// LCC 2SP forward mapping on the ellipsoid. Throws OutOfDomain at the poles.
ProjectedPoint lcc_forward(double lon, double lat, const LccParams& p);

/// Inverse of lcc_forward. Latitude is recovered by fixed-point iteration
/// (tolerance 1e-12 rad, at most 25 rounds); throws NoConvergence otherwise.
GeographicPoint lcc_inverse(double easting, double northing, const LccParams& p);

/// Stable IRI for a supported CRS. Throws UnsupportedCrs when none is registered.
std::string crs_uri(const CrsId& c);

/// Built-in table of supported systems (WGS84 geographic and Lambert-93),
/// extensible from a key/value config file. Read-only after setup.
class CrsRegistry {
public:
    CrsRegistry();

    /// Extends the registry from a config file. Sections start with
    /// "[NAME]"; keys are uri, kind, alias, ellipsoid_a,
    /// inverse_flattening, lat_origin, lon_origin, std_parallel_1,
    /// std_parallel_2, false_easting, false_northing.
    void load_config(const std::string& path);

    const CrsId& wgs84() const;
    const CrsId& lambert93() const;

    /// Lookup by code or alias, case-insensitive, ignoring '-', '_', ' ' and
    /// an "authority:" prefix.
    std::optional<CrsId> find(std::string_view name) const;

    /// Projection parameters for a projected CRS; nullptr for geographic ones.
    const LccParams* projection(const CrsId& c) const;

    /// Recognizes the WKT CRS text of a .prj file. A missing .prj is the
    /// caller's concern (the shapefile reader defaults to WGS84).
    CrsId parse_prj(std::string_view text) const;

    /// Maps every coordinate from source to target; identity (bit-exact) when
    /// they are equal. Structure is preserved exactly.
    Geometry transform(const Geometry& g, const CrsId& source, const CrsId& target) const;

private:
    struct Entry {
        CrsId id;
        std::optional<LccParams> lcc;
        std::vector<std::string> aliases;  // normalized
    };

    const Entry* find_entry(std::string_view name) const;
    const Entry* entry_for(const CrsId& c) const;

    std::vector<Entry> entries_;
};

}  // namespace geordf
