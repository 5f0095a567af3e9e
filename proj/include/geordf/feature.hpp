#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geordf/attributes.hpp"
#include "geordf/crs.hpp"
#include "geordf/geometry.hpp"

namespace geordf {

struct FeatureProperty {
    std::string name;
    std::string string_value;
    FieldKind kind = FieldKind::character;
    AttrValue value;
};

struct GeometryProperty {
    std::string name;
    std::string string_value;  // WKT rendering of the stored geometry
    Geometry geometry;
    int num_geometries = 0;
    int num_interior_ring = 0;
};

struct Feature {
    std::vector<FeatureProperty> thematic;
    std::vector<GeometryProperty> geometric;  // empty for null-shape records
    std::string source_id;
};

struct ParseFeaturesOptions {
    /// When set and different from the collection CRS, every geometry is
    /// reprojected before storage.
    std::optional<CrsId> target_crs;
    /// Designated identifier column; empty falls back to the 1-based record
    /// position.
    std::string id_column;
    std::string geometry_property_name = "geometry";
};

/// Classifies each record's values into thematic and geometric properties,
/// computing the geometry descriptors and applying the CRS conversion
/// on the fly. Output order matches input order.
std::vector<Feature> parse_features(const FeatureCollection& fc, const ParseFeaturesOptions& opts,
                                    const CrsRegistry& registry);

}  // namespace geordf
