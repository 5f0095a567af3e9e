#include "geordf/feature.hpp"

#include "geordf/errors.hpp"
#include "geordf/wkt.hpp"

namespace geordf {

std::vector<Feature> parse_features(const FeatureCollection& fc, const ParseFeaturesOptions& opts,
                                    const CrsRegistry& registry) {
    bool convert = opts.target_crs && !(*opts.target_crs == fc.crs);

    std::size_t id_index = fc.schema.size();
    if (!opts.id_column.empty()) {
        for (std::size_t i = 0; i < fc.schema.size(); ++i) {
            if (fc.schema[i].name == opts.id_column) {
                id_index = i;
                break;
            }
        }
        if (id_index == fc.schema.size()) throw MissingColumn(opts.id_column);
    }

    std::vector<Feature> out;
    out.reserve(fc.features.size());
    for (std::size_t row = 0; row < fc.features.size(); ++row) {
        const RawFeature& raw = fc.features[row];
        Feature f;
        f.thematic.reserve(fc.schema.size());
        for (std::size_t i = 0; i < fc.schema.size() && i < raw.attributes.size(); ++i) {
            FeatureProperty p;
            p.name = fc.schema[i].name;
            p.kind = fc.schema[i].kind;
            p.value = raw.attributes[i];
            p.string_value = attr_to_string(p.value);
            f.thematic.push_back(std::move(p));
        }
        if (raw.geometry) {
            GeometryProperty gp;
            gp.name = opts.geometry_property_name;
            gp.geometry = convert ? registry.transform(*raw.geometry, fc.crs, *opts.target_crs)
                                  : *raw.geometry;
            gp.string_value = to_wkt(gp.geometry);
            gp.num_geometries = geometry_member_count(gp.geometry);
            gp.num_interior_ring = interior_ring_count(gp.geometry);
            f.geometric.push_back(std::move(gp));
        }
        f.source_id = id_index < fc.schema.size()
                          ? attr_to_string(raw.attributes[id_index])
                          : std::to_string(row + 1);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace geordf
