#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geordf/crs.hpp"
#include "geordf/geometry.hpp"

namespace geordf {

enum class FieldKind { character, numeric_integer, numeric_decimal, logical, date };

struct FieldDescriptor {
    std::string name;  // nonempty, <= 10 bytes for DBF fields
    FieldKind kind = FieldKind::character;
    std::uint8_t length = 0;
    std::uint8_t decimal_count = 0;
};

/// One attribute cell. monostate marks a null (blank DBF numeric/logical/date).
using AttrValue = std::variant<std::monostate, std::string, std::int64_t, double, bool>;

std::string attr_to_string(const AttrValue& v);

/// Pre-classification feature record: attribute cells aligned with the
/// collection schema, plus the decoded geometry (absent for null shapes).
struct RawFeature {
    std::vector<AttrValue> attributes;
    std::optional<Geometry> geometry;
};

struct FeatureCollection {
    std::vector<FieldDescriptor> schema;
    CrsId crs;
    std::vector<RawFeature> features;
};

}  // namespace geordf
