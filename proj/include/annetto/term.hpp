#pragma once

#include "annetto/errors.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

namespace annetto {

// A named IRI, always stored fully expanded. Prefixed names are resolved
// before an Iri is constructed, so equality is plain string equality.
class Iri {
public:
    Iri() = default;
    explicit Iri(std::string value);

    const std::string& value() const { return value_; }

    bool operator==(const Iri&) const = default;
    auto operator<=>(const Iri&) const = default;

private:
    std::string value_;
};

enum class LiteralType { String, Integer, Double, DateTime };

std::string_view literal_type_name(LiteralType t);

// A typed literal holding its canonical lexical form. Integers are
// normalized to plain decimal, doubles to the shortest round-tripping
// representation, so equality and hashing reduce to (type, text).
class Literal {
public:
    static Literal str(std::string value);
    static Literal integer(std::int64_t value);
    static Literal real(double value);  // finite values only
    static Literal date_time(std::string iso8601);
    // Parses and canonicalizes; throws Error on malformed input.
    static Literal from_lexical(LiteralType type, std::string_view lexical);

    LiteralType type() const { return type_; }
    const std::string& lexical() const { return canonical_; }

    std::int64_t integer_value() const;
    double double_value() const;
    bool is_numeric() const { return type_ == LiteralType::Integer || type_ == LiteralType::Double; }
    double numeric_value() const;

    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;

private:
    Literal(LiteralType type, std::string canonical)
        : type_(type), canonical_(std::move(canonical)) {}

    LiteralType type_;
    std::string canonical_;
};

// Shortest decimal representation that parses back to exactly this value.
std::string canonical_double(double value);

using Term = std::variant<Iri, Literal>;

inline const Iri* as_iri(const Term& t) { return std::get_if<Iri>(&t); }
inline const Literal* as_literal(const Term& t) { return std::get_if<Literal>(&t); }

// Total-order key over terms: IRIs sort before literals, IRIs by value,
// literals by (type, canonical form). Used for deterministic output.
std::string term_key(const Term& t);

inline std::strong_ordering compare_terms(const Term& a, const Term& b) {
    return term_key(a) <=> term_key(b);
}

struct Triple {
    Iri subject;
    Iri predicate;
    Term object;

    bool operator==(const Triple&) const = default;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return std::hash<std::string>{}(term_key(t)); }
};

struct TripleHash {
    std::size_t operator()(const Triple& t) const {
        std::size_t h = std::hash<std::string>{}(t.subject.value());
        h ^= std::hash<std::string>{}(t.predicate.value()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= TermHash{}(t.object) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace annetto

template <>
struct std::hash<annetto::Iri> {
    std::size_t operator()(const annetto::Iri& iri) const {
        return std::hash<std::string>{}(iri.value());
    }
};
