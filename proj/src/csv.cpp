#include "geordf/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "geordf/errors.hpp"

namespace geordf {

namespace {

// One record, honoring quotes; advances pos past the trailing newline.
// Returns false at end of input.
bool next_record(const std::string& data, std::size_t& pos, char delim,
                 std::vector<std::string>& out) {
    out.clear();
    if (pos >= data.size()) return false;
    std::string field;
    bool quoted = false;
    bool any = false;
    while (pos < data.size()) {
        char c = data[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < data.size() && data[pos + 1] == '"') {
                    field += '"';
                    pos += 2;
                } else {
                    quoted = false;
                    ++pos;
                }
            } else {
                field += c;
                ++pos;
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            any = true;
            ++pos;
        } else if (c == delim) {
            out.push_back(std::move(field));
            field.clear();
            any = true;
            ++pos;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && pos + 1 < data.size() && data[pos + 1] == '\n') ++pos;
            ++pos;
            break;
        } else {
            field += c;
            any = true;
            ++pos;
        }
    }
    if (!any && out.empty() && field.empty()) return false;  // blank trailing line
    out.push_back(std::move(field));
    return true;
}

double parse_coordinate_cell(const std::string& cell, std::size_t row, const std::string& col) {
    std::string_view t = cell;
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r')) {
        t.remove_suffix(1);
    }
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw NonNumericCoordinate(row, col, cell);
    }
    return v;
}

}  // namespace

FeatureCollection read_csv_points(const std::string& path, const CsvPointsConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string data = std::move(ss).str();

    std::size_t pos = 0;
    std::vector<std::string> header;
    if (!next_record(data, pos, cfg.delimiter, header)) {
        throw ParseError("missing header row", 0);
    }

    std::size_t xi = header.size();
    std::size_t yi = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == cfg.x_column) xi = i;
        if (header[i] == cfg.y_column) yi = i;
    }
    if (xi == header.size()) throw MissingColumn(cfg.x_column);
    if (yi == header.size()) throw MissingColumn(cfg.y_column);

    FeatureCollection fc;
    fc.crs = cfg.crs;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i == xi || i == yi) continue;
        FieldDescriptor fd;
        fd.name = header[i];
        fd.kind = FieldKind::character;
        fc.schema.push_back(std::move(fd));
    }

    std::vector<std::string> row;
    std::size_t row_number = 0;
    while (next_record(data, pos, cfg.delimiter, row)) {
        ++row_number;
        if (row.size() != header.size()) {
            throw ParseError("row " + std::to_string(row_number) + " has " +
                                 std::to_string(row.size()) + " fields, expected " +
                                 std::to_string(header.size()),
                             pos);
        }
        RawFeature f;
        double x = parse_coordinate_cell(row[xi], row_number, cfg.x_column);
        double y = parse_coordinate_cell(row[yi], row_number, cfg.y_column);
        f.geometry = Geometry{Point{{x, y}}};
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i == xi || i == yi) continue;
            f.attributes.emplace_back(std::move(row[i]));
        }
        fc.features.push_back(std::move(f));
    }
    return fc;
}

}  // namespace geordf
