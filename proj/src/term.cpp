#include "annetto/term.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace annetto {

namespace {

bool iri_char_ok(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u <= 0x20) return false;  // whitespace and control characters
    switch (c) {
        case '<':
        case '>':
        case '"':
        case '{':
        case '}':
        case '|':
        case '^':
        case '`':
        case '\\':
            return false;
        default:
            return true;
    }
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// YYYY-MM-DDThh:mm:ss with optional fraction and optional Z / +hh:mm zone.
bool valid_date_time(std::string_view s) {
    if (s.size() < 19) return false;
    if (!all_digits(s.substr(0, 4)) || s[4] != '-' || !all_digits(s.substr(5, 2)) || s[7] != '-' ||
        !all_digits(s.substr(8, 2)) || s[10] != 'T' || !all_digits(s.substr(11, 2)) || s[13] != ':' ||
        !all_digits(s.substr(14, 2)) || s[16] != ':' || !all_digits(s.substr(17, 2))) {
        return false;
    }
    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        std::size_t start = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return false;
    }
    if (pos == s.size()) return true;
    if (s[pos] == 'Z') return pos + 1 == s.size();
    if (s[pos] == '+' || s[pos] == '-') {
        return s.size() == pos + 6 && all_digits(s.substr(pos + 1, 2)) && s[pos + 3] == ':' &&
               all_digits(s.substr(pos + 4, 2));
    }
    return false;
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) {
        throw Error("IRI must not be empty");
    }
    for (char c : value_) {
        if (!iri_char_ok(c)) {
            throw Error("malformed IRI '" + value_ + "': illegal character");
        }
    }
}

std::string_view literal_type_name(LiteralType t) {
    switch (t) {
        case LiteralType::String: return "string";
        case LiteralType::Integer: return "integer";
        case LiteralType::Double: return "double";
        case LiteralType::DateTime: return "dateTime";
    }
    return "?";
}

std::string canonical_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

Literal Literal::str(std::string value) {
    return Literal(LiteralType::String, std::move(value));
}

Literal Literal::integer(std::int64_t value) {
    return Literal(LiteralType::Integer, std::to_string(value));
}

Literal Literal::real(double value) {
    if (!std::isfinite(value)) {
        throw Error("double literal must be finite");
    }
    if (value == 0.0) value = 0.0;  // collapse -0.0 so equal values share one form
    return Literal(LiteralType::Double, canonical_double(value));
}

Literal Literal::date_time(std::string iso8601) {
    if (!valid_date_time(iso8601)) {
        throw Error("malformed dateTime literal '" + iso8601 + "' (expected ISO-8601)");
    }
    return Literal(LiteralType::DateTime, std::move(iso8601));
}

Literal Literal::from_lexical(LiteralType type, std::string_view lexical) {
    switch (type) {
        case LiteralType::String:
            return str(std::string(lexical));
        case LiteralType::Integer: {
            std::int64_t v = 0;
            std::string_view body = lexical;
            if (!body.empty() && body.front() == '+') body.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
            if (ec != std::errc() || ptr != body.data() + body.size() || body.empty()) {
                throw Error("malformed integer literal '" + std::string(lexical) + "'");
            }
            return integer(v);
        }
        case LiteralType::Double: {
            double v = 0;
            std::string_view body = lexical;
            if (!body.empty() && body.front() == '+') body.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
            if (ec != std::errc() || ptr != body.data() + body.size() || body.empty() || !std::isfinite(v)) {
                throw Error("malformed double literal '" + std::string(lexical) + "'");
            }
            return real(v);
        }
        case LiteralType::DateTime:
            return date_time(std::string(lexical));
    }
    throw Error("unknown literal type");
}

std::int64_t Literal::integer_value() const {
    std::int64_t v = 0;
    std::from_chars(canonical_.data(), canonical_.data() + canonical_.size(), v);
    return v;
}

double Literal::double_value() const {
    double v = 0;
    std::from_chars(canonical_.data(), canonical_.data() + canonical_.size(), v);
    return v;
}

double Literal::numeric_value() const {
    return type_ == LiteralType::Integer ? static_cast<double>(integer_value()) : double_value();
}

std::string term_key(const Term& t) {
    if (const Iri* iri = as_iri(t)) {
        return "I" + iri->value();
    }
    const Literal& lit = std::get<Literal>(t);
    std::string key = "L";
    switch (lit.type()) {
        case LiteralType::String: key += "s\x1f"; break;
        case LiteralType::Integer: key += "i\x1f"; break;
        case LiteralType::Double: key += "d\x1f"; break;
        case LiteralType::DateTime: key += "t\x1f"; break;
    }
    key += lit.lexical();
    return key;
}

}  // namespace annetto
