#pragma once

#include <string>

#include "geordf/attributes.hpp"
#include "geordf/crs.hpp"

namespace geordf {

struct CsvPointsConfig {
    std::string x_column;
    std::string y_column;
    CrsId crs;
    char delimiter = ',';
};

/// Reads a delimited text file with a header row into point features: the
/// configured x/y columns become the geometry, every other column a
/// character-typed attribute. RFC-4180 quoting applies.
FeatureCollection read_csv_points(const std::string& path, const CsvPointsConfig& cfg);

}  // namespace geordf
