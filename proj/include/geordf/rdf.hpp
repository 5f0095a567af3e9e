#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace geordf::rdf {

namespace ns {
inline constexpr const char* rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* owl = "http://www.w3.org/2002/07/owl#";
inline constexpr const char* geom = "http://data.ign.fr/def/geometrie#";
inline constexpr const char* geofla = "http://data.ign.fr/def/geofla#";
inline constexpr const char* geosparql = "http://www.opengis.net/ont/geosparql#";
inline const std::string xsd_string = std::string(xsd) + "string";
inline const std::string xsd_double = std::string(xsd) + "double";
inline const std::string xsd_integer = std::string(xsd) + "integer";
inline const std::string xsd_boolean = std::string(xsd) + "boolean";
inline const std::string xsd_date = std::string(xsd) + "date";
inline const std::string rdf_type = std::string(rdf) + "type";
inline const std::string rdf_first = std::string(rdf) + "first";
inline const std::string rdf_rest = std::string(rdf) + "rest";
inline const std::string rdf_nil = std::string(rdf) + "nil";
inline const std::string rdf_lang_string = std::string(rdf) + "langString";
inline const std::string rdfs_label = std::string(rdfs) + "label";
inline const std::string owl_same_as = std::string(owl) + "sameAs";
}  // namespace ns

struct Term {
    enum class Kind { iri, blank, literal };

    Kind kind = Kind::iri;
    std::string value;     // IRI text, blank label, or literal lexical form
    std::string datatype;  // literals only; absolute IRI
    std::string lang;      // literals only; nonempty implies rdf:langString

    static Term iri(std::string text) { return {Kind::iri, std::move(text), "", ""}; }
    static Term blank(std::string label) { return {Kind::blank, std::move(label), "", ""}; }
    static Term literal(std::string lexical, std::string datatype = ns::xsd_string) {
        return {Kind::literal, std::move(lexical), std::move(datatype), ""};
    }
    static Term lang_literal(std::string lexical, std::string lang) {
        return {Kind::literal, std::move(lexical), ns::rdf_lang_string, std::move(lang)};
    }

    bool is_iri() const { return kind == Kind::iri; }
    bool is_blank() const { return kind == Kind::blank; }
    bool is_literal() const { return kind == Kind::literal; }

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

struct TermHash {
    std::size_t operator()(const Term& t) const {
        std::size_t h = std::hash<std::string>{}(t.value);
        h ^= std::hash<int>{}(static_cast<int>(t.kind)) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.datatype) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.lang) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }
};

struct Triple {
    Term subject;    // IRI or blank
    Term predicate;  // IRI
    Term object;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Hands out "_:bn000001"-style labels, zero-padded to six digits.
class BlankAllocator {
public:
    std::string next_label();
    Term next() { return Term::blank(next_label()); }
    std::uint64_t counter() const { return next_; }

private:
    std::uint64_t next_ = 1;
};

/// Insertion-ordered triple multiset with duplicate suppression, a prefix
/// table, and the blank-node counter. Single-writer; reads are safe to share.
class Graph {
public:
    Graph();

    /// Appends the triple unless already present. Returns true when inserted.
    bool insert(Triple t);
    bool insert(Term s, Term p, Term o) { return insert({std::move(s), std::move(p), std::move(o)}); }

    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }
    bool contains(const Triple& t) const;

    /// Objects of (s, p, ?) in insertion order.
    std::vector<Term> objects(const Term& s, const Term& p) const;
    /// First object of (s, p, ?), if any.
    std::optional<Term> object(const Term& s, const Term& p) const;
    /// Subjects of (?, p, o) in insertion order.
    std::vector<Term> subjects(const Term& p, const Term& o) const;

    void add_prefix(const std::string& prefix, const std::string& iri);
    const std::vector<std::pair<std::string, std::string>>& prefixes() const { return prefixes_; }

    BlankAllocator& blanks() { return blanks_; }

private:
    struct PairHash {
        std::size_t operator()(const std::pair<Term, Term>& p) const {
            std::size_t h = TermHash{}(p.first);
            return h ^ (TermHash{}(p.second) + 0x9e3779b9 + (h << 6) + (h >> 2));
        }
    };
    struct TripleHash {
        std::size_t operator()(const Triple& t) const {
            std::size_t h = TermHash{}(t.subject);
            h ^= TermHash{}(t.predicate) + 0x9e3779b9 + (h << 6) + (h >> 2);
            h ^= TermHash{}(t.object) + 0x9e3779b9 + (h << 6) + (h >> 2);
            return h;
        }
    };

    std::vector<Triple> triples_;
    std::unordered_map<Triple, std::size_t, TripleHash> seen_;
    std::unordered_map<std::pair<Term, Term>, std::vector<std::size_t>, PairHash> by_sp_;
    std::unordered_map<std::pair<Term, Term>, std::vector<std::size_t>, PairHash> by_po_;
    std::vector<std::pair<std::string, std::string>> prefixes_;
    BlankAllocator blanks_;
};

/// One triple per line, escapes per the N-Triples grammar; with sorted set,
/// lines are emitted in lexicographic order for byte-stable diffs.
std::string serialize_ntriples(const Graph& g, bool sorted = false);

/// Prefix declarations first, subjects grouped with ';'. Datatype literals
/// render as "lex"^^prefix:name when the datatype namespace is prefixed.
std::string serialize_turtle(const Graph& g);

}  // namespace geordf::rdf
