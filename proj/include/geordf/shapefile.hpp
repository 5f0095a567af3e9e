#pragma once

#include <string>

#include "geordf/attributes.hpp"
#include "geordf/crs.hpp"

namespace geordf {

enum class TextEncoding { latin1, utf8 };

struct DbfTable {
    std::vector<FieldDescriptor> schema;
    std::vector<std::vector<AttrValue>> rows;  // deleted records excluded
};

/// Reads a dBASE III table. Character cells are trimmed of trailing spaces
/// and transcoded to UTF-8; blank numeric/logical/date cells decode to null.
DbfTable read_dbf(const std::string& path, TextEncoding encoding = TextEncoding::latin1);

struct ShapefileOptions {
    TextEncoding encoding = TextEncoding::latin1;
};

/// Reads the .shp/.dbf/.shx/.prj sidecar set for base_path (with or without
/// an extension). Geometries come from .shp, attributes join 1:1 from .dbf
/// by record order; a missing .prj defaults the CRS to WGS84. Polygon
/// records are re-assembled into MultiPolygons using ring winding
/// (clockwise exterior) with holes assigned by point-in-ring containment.
FeatureCollection read_shapefile(const std::string& base_path, const CrsRegistry& registry,
                                 const ShapefileOptions& opts = {});

}  // namespace geordf
