#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geordf {

/// Base class of every failure raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (WKT, .prj, CSV, config files).
struct ParseError : Error {
    std::size_t offset;  // byte offset into the input where parsing failed
    ParseError(const std::string& what, std::size_t at)
        : Error(what + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

struct UnsupportedCrs : Error {
    std::string name;
    explicit UnsupportedCrs(const std::string& crs_name)
        : Error("unsupported CRS: " + crs_name), name(crs_name) {}
};

struct UnsupportedTransformation : Error {
    UnsupportedTransformation(const std::string& source, const std::string& target)
        : Error("no transformation path from " + source + " to " + target) {}
};

struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& what) : Error(what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

// Shapefile / dBASE decoding failures.

struct BadMagic : Error {
    explicit BadMagic(const std::string& what) : Error(what) {}
};

struct TruncatedHeader : Error {
    explicit TruncatedHeader(const std::string& what) : Error(what) {}
};

struct TruncatedRecord : Error {
    explicit TruncatedRecord(const std::string& what) : Error(what) {}
};

struct BadFieldDescriptor : Error {
    explicit BadFieldDescriptor(const std::string& what) : Error(what) {}
};

struct RecordCountMismatch : Error {
    RecordCountMismatch(std::size_t shp_count, std::size_t dbf_count)
        : Error(".shp has " + std::to_string(shp_count) + " records but .dbf has " +
                std::to_string(dbf_count) + " live rows") {}
};

struct UnsupportedShapeType : Error {
    explicit UnsupportedShapeType(const std::string& what) : Error(what) {}
};

struct InvalidRing : Error {
    explicit InvalidRing(const std::string& what) : Error(what) {}
};

// CSV ingestion.

struct MissingColumn : Error {
    std::string column;
    explicit MissingColumn(const std::string& name)
        : Error("missing column: " + name), column(name) {}
};

struct NonNumericCoordinate : Error {
    std::size_t row;
    std::string column;
    NonNumericCoordinate(std::size_t data_row, const std::string& name, const std::string& value)
        : Error("row " + std::to_string(data_row) + ", column " + name +
                ": not a numeric coordinate: \"" + value + "\""),
          row(data_row),
          column(name) {}
};

// RDF geometry reconstruction.

struct MalformedStructure : Error {
    explicit MalformedStructure(const std::string& reason) : Error(reason) {}
};

struct EmptyIdentifier : Error {
    EmptyIdentifier() : Error("empty feature identifier") {}
};

}  // namespace geordf
