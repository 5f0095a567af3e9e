#include "geordf/shapefile.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "geordf/errors.hpp"

namespace geordf {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

std::uint32_t load_u32_be(const char* p) {
    auto b = reinterpret_cast<const unsigned char*>(p);
    return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
           (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

std::uint32_t load_u32_le(const char* p) {
    auto b = reinterpret_cast<const unsigned char*>(p);
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
           (std::uint32_t(b[3]) << 24);
}

std::uint16_t load_u16_le(const char* p) {
    auto b = reinterpret_cast<const unsigned char*>(p);
    return std::uint16_t(b[0] | (b[1] << 8));
}

double load_f64_le(const char* p) {
    std::uint64_t bits = 0;
    auto b = reinterpret_cast<const unsigned char*>(p);
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | b[i];
    return std::bit_cast<double>(bits);
}

// Bounds-checked view over one shapefile record's content.
class RecordCursor {
public:
    RecordCursor(const char* data, std::size_t size, int record_number)
        : data_(data), size_(size), record_(record_number) {}

    std::int32_t i32() {
        need(4);
        std::uint32_t v = load_u32_le(data_ + pos_);
        pos_ += 4;
        return static_cast<std::int32_t>(v);
    }

    double f64() {
        need(8);
        double v = load_f64_le(data_ + pos_);
        pos_ += 8;
        return v;
    }

    void skip(std::size_t n) {
        need(n);
        pos_ += n;
    }

    std::size_t remaining() const { return size_ - pos_; }

private:
    void need(std::size_t n) {
        if (pos_ + n > size_) {
            throw TruncatedRecord("record " + std::to_string(record_) +
                                  ": content shorter than its declared layout");
        }
    }

    const char* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
    int record_;
};

// --- dBASE ---------------------------------------------------------------

std::string latin1_to_utf8(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if (c < 0x80) {
            out += static_cast<char>(c);
        } else {
            out += static_cast<char>(0xC0 | (c >> 6));
            out += static_cast<char>(0x80 | (c & 0x3F));
        }
    }
    return out;
}

std::string_view rtrim(std::string_view s) {
    std::size_t e = s.size();
    while (e > 0 && (s[e - 1] == ' ' || s[e - 1] == '\0')) --e;
    return s.substr(0, e);
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    while (b < s.size() && s[b] == ' ') ++b;
    s = s.substr(b);
    return rtrim(s);
}

AttrValue parse_dbf_cell(std::string_view raw, const FieldDescriptor& fd, TextEncoding enc) {
    switch (fd.kind) {
        case FieldKind::character: {
            std::string_view t = rtrim(raw);
            return enc == TextEncoding::latin1 ? latin1_to_utf8(t) : std::string(t);
        }
        case FieldKind::numeric_integer: {
            std::string_view t = trim(raw);
            if (t.empty() || t.find('*') != std::string_view::npos) return std::monostate{};
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc{} || ptr != t.data() + t.size()) return std::monostate{};
            return v;
        }
        case FieldKind::numeric_decimal: {
            std::string_view t = trim(raw);
            if (t.empty() || t.find('*') != std::string_view::npos) return std::monostate{};
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc{} || ptr != t.data() + t.size()) return std::monostate{};
            return v;
        }
        case FieldKind::logical: {
            if (raw.empty()) return std::monostate{};
            switch (raw[0]) {
                case 'Y': case 'y': case 'T': case 't': return true;
                case 'N': case 'n': case 'F': case 'f': return false;
                default: return std::monostate{};
            }
        }
        case FieldKind::date: {
            std::string_view t = trim(raw);
            if (t.size() != 8) return std::monostate{};
            return std::string(t.substr(0, 4)) + "-" + std::string(t.substr(4, 2)) + "-" +
                   std::string(t.substr(6, 2));
        }
    }
    return std::monostate{};
}

// --- polygon ring assembly -----------------------------------------------

double signed_area2(const std::vector<Coordinate>& ring) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
        s += ring[i].x * ring[i + 1].y - ring[i + 1].x * ring[i].y;
    }
    return s;
}

bool point_in_ring(const Coordinate& pt, const std::vector<Coordinate>& ring) {
    bool inside = false;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        const Coordinate& a = ring[i];
        const Coordinate& b = ring[j];
        if ((a.y > pt.y) != (b.y > pt.y) &&
            pt.x < (b.x - a.x) * (pt.y - a.y) / (b.y - a.y) + a.x) {
            inside = !inside;
        }
    }
    return inside;
}

// Snaps a nearly-closed ring shut; a gap over 1e-9 is a data error.
LinearRing repair_ring(std::vector<Coordinate> pts, int record_number) {
    if (pts.size() >= 2 && !(pts.front() == pts.back())) {
        double dx = std::abs(pts.front().x - pts.back().x);
        double dy = std::abs(pts.front().y - pts.back().y);
        if (dx <= 1e-9 && dy <= 1e-9) {
            pts.back() = pts.front();
        } else {
            throw InvalidRing("record " + std::to_string(record_number) +
                              ": unclosed ring (gap exceeds 1e-9)");
        }
    }
    if (pts.size() < 4) {
        throw InvalidRing("record " + std::to_string(record_number) + ": ring length < 4");
    }
    return LinearRing{std::move(pts)};
}

// Clockwise rings are exteriors, counter-clockwise ones are holes; each hole
// joins the smallest exterior that contains its first vertex.
MultiPolygon assemble_polygons(std::vector<LinearRing> rings, int record_number) {
    MultiPolygon mp;
    std::vector<LinearRing> holes;
    std::vector<double> exterior_area2;
    for (auto& r : rings) {
        double a2 = signed_area2(r.points);
        if (a2 <= 0.0) {
            mp.members.push_back(Polygon{std::move(r), {}});
            exterior_area2.push_back(std::abs(a2));
        } else {
            holes.push_back(std::move(r));
        }
    }
    if (mp.members.empty()) {
        // All rings wound counter-clockwise: keep them all as exteriors
        // rather than dropping the record.
        for (auto& h : holes) mp.members.push_back(Polygon{std::move(h), {}});
        if (mp.members.empty()) {
            throw InvalidRing("record " + std::to_string(record_number) + ": no rings");
        }
        return mp;
    }
    for (auto& h : holes) {
        std::size_t best = mp.members.size();
        double best_area = 0.0;
        for (std::size_t i = 0; i < mp.members.size(); ++i) {
            if (point_in_ring(h.points.front(), mp.members[i].exterior.points) &&
                (best == mp.members.size() || exterior_area2[i] < best_area)) {
                best = i;
                best_area = exterior_area2[i];
            }
        }
        if (best == mp.members.size()) {
            // Orphan hole: promote to its own exterior.
            mp.members.push_back(Polygon{std::move(h), {}});
            exterior_area2.push_back(0.0);
        } else {
            mp.members[best].interiors.push_back(std::move(h));
        }
    }
    return mp;
}

// --- shape records ---------------------------------------------------------

constexpr int kShapeNull = 0;
constexpr int kShapePoint = 1;
constexpr int kShapePolyLine = 3;
constexpr int kShapePolygon = 5;
constexpr int kShapeMultiPoint = 8;

std::vector<Coordinate> read_points(RecordCursor& c, int n) {
    std::vector<Coordinate> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = c.f64();
        double y = c.f64();
        pts.push_back({x, y});
    }
    return pts;
}

std::optional<Geometry> decode_record(RecordCursor& c, int record_number) {
    std::int32_t shape_type = c.i32();
    switch (shape_type) {
        case kShapeNull:
            return std::nullopt;
        case kShapePoint: {
            double x = c.f64();
            double y = c.f64();
            return Geometry{Point{{x, y}}};
        }
        case kShapeMultiPoint: {
            c.skip(32);  // box
            std::int32_t n = c.i32();
            if (n < 0) throw TruncatedRecord("record " + std::to_string(record_number) +
                                             ": negative point count");
            return Geometry{MultiPoint{read_points(c, n)}};
        }
        case kShapePolyLine:
        case kShapePolygon: {
            c.skip(32);  // box
            std::int32_t num_parts = c.i32();
            std::int32_t num_points = c.i32();
            if (num_parts <= 0 || num_points < 0) {
                throw TruncatedRecord("record " + std::to_string(record_number) +
                                      ": bad part/point counts");
            }
            std::vector<std::int32_t> parts(static_cast<std::size_t>(num_parts));
            for (auto& p : parts) p = c.i32();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                std::int32_t end = i + 1 < parts.size() ? parts[i + 1] : num_points;
                if (parts[i] < 0 || parts[i] > end || end > num_points) {
                    throw TruncatedRecord("record " + std::to_string(record_number) +
                                          ": malformed part index table");
                }
            }
            std::vector<Coordinate> all = read_points(c, num_points);
            if (shape_type == kShapePolyLine) {
                if (num_parts != 1) {
                    throw UnsupportedShapeType("record " + std::to_string(record_number) +
                                               ": multi-part PolyLine");
                }
                if (all.size() < 2) {
                    throw TruncatedRecord("record " + std::to_string(record_number) +
                                          ": PolyLine with fewer than 2 points");
                }
                return Geometry{LineString{std::move(all)}};
            }
            std::vector<LinearRing> rings;
            rings.reserve(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) {
                std::size_t from = static_cast<std::size_t>(parts[i]);
                std::size_t to = i + 1 < parts.size() ? static_cast<std::size_t>(parts[i + 1])
                                                      : all.size();
                rings.push_back(repair_ring({all.begin() + from, all.begin() + to},
                                            record_number));
            }
            return Geometry{assemble_polygons(std::move(rings), record_number)};
        }
        default:
            throw UnsupportedShapeType("record " + std::to_string(record_number) +
                                       ": shape type " + std::to_string(shape_type) +
                                       " (only Point, PolyLine, Polygon, MultiPoint)");
    }
}

std::string strip_known_extension(const std::string& base) {
    std::filesystem::path p(base);
    std::string ext = p.extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".shp" || ext == ".shx" || ext == ".dbf" || ext == ".prj") {
        return (p.parent_path() / p.stem()).string();
    }
    return base;
}

}  // namespace

DbfTable read_dbf(const std::string& path, TextEncoding encoding) {
    std::string data = read_file(path);
    if (data.size() < 32) throw TruncatedHeader(path + ": dBASE header shorter than 32 bytes");

    std::uint32_t record_count = load_u32_le(data.data() + 4);
    std::uint16_t header_len = load_u16_le(data.data() + 8);
    std::uint16_t record_len = load_u16_le(data.data() + 10);
    if (header_len > data.size()) {
        throw TruncatedHeader(path + ": declared header length exceeds file size");
    }

    DbfTable table;
    std::size_t offset = 32;
    while (true) {
        if (offset >= data.size()) throw TruncatedHeader(path + ": missing 0x0D terminator");
        if (static_cast<unsigned char>(data[offset]) == 0x0D) {
            ++offset;
            break;
        }
        if (offset + 32 > data.size() || offset + 32 > header_len) {
            throw TruncatedHeader(path + ": field descriptor runs past the header");
        }
        const char* d = data.data() + offset;
        std::size_t name_len = 0;
        while (name_len < 11 && d[name_len] != '\0') ++name_len;
        if (name_len == 0 || name_len > 10) {
            throw BadFieldDescriptor(path + ": field name empty or over 10 bytes");
        }
        FieldDescriptor fd;
        fd.name.assign(d, name_len);
        fd.length = static_cast<std::uint8_t>(d[16]);
        fd.decimal_count = static_cast<std::uint8_t>(d[17]);
        switch (d[11]) {
            case 'C': fd.kind = FieldKind::character; break;
            case 'N': fd.kind = fd.decimal_count == 0 ? FieldKind::numeric_integer
                                                      : FieldKind::numeric_decimal; break;
            case 'F': fd.kind = FieldKind::numeric_decimal; break;
            case 'L': fd.kind = FieldKind::logical; break;
            case 'D': fd.kind = FieldKind::date; break;
            default:
                throw BadFieldDescriptor(path + ": unknown field type '" +
                                         std::string(1, d[11]) + "' for " + fd.name);
        }
        table.schema.push_back(std::move(fd));
        offset += 32;
    }

    std::size_t row_width = 1;
    for (const auto& fd : table.schema) row_width += fd.length;
    if (record_len != row_width) {
        throw BadFieldDescriptor(path + ": record length " + std::to_string(record_len) +
                                 " does not match field widths (" + std::to_string(row_width) +
                                 ")");
    }

    std::size_t pos = header_len;
    for (std::uint32_t i = 0; i < record_count; ++i) {
        if (pos + record_len > data.size()) {
            throw TruncatedRecord(path + ": row " + std::to_string(i + 1) +
                                  " runs past end of file");
        }
        char flag = data[pos];
        if (flag != '*') {
            std::vector<AttrValue> row;
            row.reserve(table.schema.size());
            std::size_t cell = pos + 1;
            for (const auto& fd : table.schema) {
                row.push_back(parse_dbf_cell({data.data() + cell, fd.length}, fd, encoding));
                cell += fd.length;
            }
            table.rows.push_back(std::move(row));
        }
        pos += record_len;
    }
    return table;
}

FeatureCollection read_shapefile(const std::string& base_path, const CrsRegistry& registry,
                                 const ShapefileOptions& opts) {
    std::string base = strip_known_extension(base_path);
    std::string shp = read_file(base + ".shp");
    if (shp.size() < 100) throw TruncatedHeader(base + ".shp: header shorter than 100 bytes");
    if (load_u32_be(shp.data()) != 9994) {
        throw BadMagic(base + ".shp: file code is not 9994");
    }
    std::size_t declared = static_cast<std::size_t>(load_u32_be(shp.data() + 24)) * 2;
    if (declared > shp.size()) {
        throw TruncatedRecord(base + ".shp: file shorter than its declared length");
    }

    // Record offsets: from the index when present, otherwise a sequential scan.
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // (content offset, content bytes)
    std::string shx_path = base + ".shx";
    if (std::filesystem::exists(shx_path)) {
        std::string shx = read_file(shx_path);
        if (shx.size() < 100) throw TruncatedHeader(shx_path + ": header shorter than 100 bytes");
        if (load_u32_be(shx.data()) != 9994) throw BadMagic(shx_path + ": file code is not 9994");
        std::size_t shx_declared = static_cast<std::size_t>(load_u32_be(shx.data() + 24)) * 2;
        if (shx_declared > shx.size()) {
            throw TruncatedRecord(shx_path + ": file shorter than its declared length");
        }
        for (std::size_t pos = 100; pos + 8 <= shx_declared; pos += 8) {
            std::size_t off = static_cast<std::size_t>(load_u32_be(shx.data() + pos)) * 2;
            std::size_t len = static_cast<std::size_t>(load_u32_be(shx.data() + pos + 4)) * 2;
            if (off + 8 + len > shp.size()) {
                throw TruncatedRecord(base + ".shp: indexed record runs past end of file");
            }
            spans.emplace_back(off + 8, len);
        }
    } else {
        std::size_t pos = 100;
        while (pos < declared) {
            if (pos + 8 > shp.size()) {
                throw TruncatedRecord(base + ".shp: record header runs past end of file");
            }
            std::size_t len = static_cast<std::size_t>(load_u32_be(shp.data() + pos + 4)) * 2;
            if (pos + 8 + len > shp.size()) {
                throw TruncatedRecord(base + ".shp: record content runs past end of file");
            }
            spans.emplace_back(pos + 8, len);
            pos += 8 + len;
        }
    }

    std::vector<std::optional<Geometry>> geometries;
    geometries.reserve(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) {
        RecordCursor cur(shp.data() + spans[i].first, spans[i].second,
                         static_cast<int>(i + 1));
        geometries.push_back(decode_record(cur, static_cast<int>(i + 1)));
    }

    DbfTable table = read_dbf(base + ".dbf", opts.encoding);
    if (table.rows.size() != geometries.size()) {
        throw RecordCountMismatch(geometries.size(), table.rows.size());
    }

    FeatureCollection fc;
    fc.schema = std::move(table.schema);
    std::string prj_path = base + ".prj";
    if (std::filesystem::exists(prj_path)) {
        fc.crs = registry.parse_prj(read_file(prj_path));
    } else {
        fc.crs = registry.wgs84();
    }
    fc.features.reserve(geometries.size());
    for (std::size_t i = 0; i < geometries.size(); ++i) {
        fc.features.push_back(RawFeature{std::move(table.rows[i]), std::move(geometries[i])});
    }
    return fc;
}

std::string attr_to_string(const AttrValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, std::string>) return x;
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
            else if constexpr (std::is_same_v<T, double>) {
                char buf[64];
                auto res = std::to_chars(buf, buf + sizeof buf, x);
                return std::string(buf, res.ptr);
            } else {
                return x ? "true" : "false";
            }
        },
        v);
}

}  // namespace geordf
