#include "annetto/turtle.hpp"

#include "annetto/vocab.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace annetto {

namespace {

struct Token {
    enum class Kind { Eof, Dot, Semi, Comma, A, IriRef, PName, String, Integer, Double, PrefixDecl, CaretCaret };
    Kind kind = Kind::Eof;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    const Token& peek() {
        if (!lookahead_) lookahead_ = lex();
        return *lookahead_;
    }

    Token next() {
        if (lookahead_) {
            Token t = *lookahead_;
            lookahead_.reset();
            return t;
        }
        return lex();
    }

    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ParseError(at.line, at.col, msg);
    }

private:
    char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char ahead(std::size_t n = 1) const { return pos_ + n < text_.size() ? text_[pos_ + n] : '\0'; }
    bool done() const { return pos_ >= text_.size(); }

    void advance() {
        if (done()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (!done()) {
            char c = cur();
            if (c == '#') {
                while (!done() && cur() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token make(Token::Kind k, std::string text, int line, int col) {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.line = line;
        t.col = col;
        return t;
    }

    Token lex() {
        skip_space_and_comments();
        int line = line_, col = col_;
        if (done()) return make(Token::Kind::Eof, "", line, col);
        char c = cur();

        if (c == '.') {
            advance();
            return make(Token::Kind::Dot, ".", line, col);
        }
        if (c == ';') {
            advance();
            return make(Token::Kind::Semi, ";", line, col);
        }
        if (c == ',') {
            advance();
            return make(Token::Kind::Comma, ",", line, col);
        }
        if (c == '^' && ahead() == '^') {
            advance();
            advance();
            return make(Token::Kind::CaretCaret, "^^", line, col);
        }
        if (c == '<') return lex_iriref(line, col);
        if (c == '"') return lex_string(line, col);
        if (c == '@') return lex_directive(line, col);
        if (c == '_' && ahead() == ':') throw UnsupportedError(line, col, "blank node");
        if (c == '[' || c == ']') throw UnsupportedError(line, col, "blank node");
        if (c == '(' || c == ')') throw UnsupportedError(line, col, "collection");
        if (c == '\'') throw UnsupportedError(line, col, "single-quoted string");
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return lex_number(line, col);
        if (c == ':' || c == '_' || std::isalpha(static_cast<unsigned char>(c))) return lex_name(line, col);
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

    Token lex_iriref(int line, int col) {
        advance();  // <
        std::string value;
        while (!done() && cur() != '>') {
            if (cur() == '\n') throw ParseError(line, col, "unterminated IRI");
            value += cur();
            advance();
        }
        if (done()) throw ParseError(line, col, "unterminated IRI");
        advance();  // >
        return make(Token::Kind::IriRef, std::move(value), line, col);
    }

    Token lex_string(int line, int col) {
        if (ahead() == '"' && ahead(2) == '"') {
            throw UnsupportedError(line, col, "multiline string");
        }
        advance();  // opening quote
        std::string value;
        while (true) {
            if (done() || cur() == '\n') throw ParseError(line, col, "unterminated string");
            char c = cur();
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\\') {
                advance();
                if (done()) throw ParseError(line, col, "unterminated string");
                char e = cur();
                switch (e) {
                    case 't': value += '\t'; break;
                    case 'n': value += '\n'; break;
                    case 'r': value += '\r'; break;
                    case 'b': value += '\b'; break;
                    case 'f': value += '\f'; break;
                    case '"': value += '"'; break;
                    case '\\': value += '\\'; break;
                    case 'u': {
                        advance();
                        unsigned cp = 0;
                        for (int i = 0; i < 4; ++i) {
                            if (done() || !std::isxdigit(static_cast<unsigned char>(cur()))) {
                                throw ParseError(line_, col_, "bad \\u escape");
                            }
                            char h = cur();
                            cp = cp * 16 + static_cast<unsigned>(
                                h <= '9' ? h - '0' : (std::tolower(h) - 'a' + 10));
                            advance();
                        }
                        append_utf8(value, cp);
                        continue;  // cur() already past the escape
                    }
                    default:
                        throw ParseError(line_, col_, std::string("unknown escape '\\") + e + "'");
                }
                advance();
                continue;
            }
            value += c;
            advance();
        }
        return make(Token::Kind::String, std::move(value), line, col);
    }

    static void append_utf8(std::string& out, unsigned cp) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    Token lex_directive(int line, int col) {
        advance();  // @
        std::string word;
        while (!done() && std::isalpha(static_cast<unsigned char>(cur()))) {
            word += cur();
            advance();
        }
        if (word == "prefix") return make(Token::Kind::PrefixDecl, word, line, col);
        if (word == "base") throw UnsupportedError(line, col, "base directive");
        throw ParseError(line, col, "unknown directive '@" + word + "'");
    }

    Token lex_number(int line, int col) {
        std::string text;
        if (cur() == '+' || cur() == '-') {
            text += cur();
            advance();
        }
        bool any_digit = false;
        while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
            text += cur();
            advance();
            any_digit = true;
        }
        bool is_double = false;
        if (cur() == '.' && std::isdigit(static_cast<unsigned char>(ahead()))) {
            is_double = true;
            text += cur();
            advance();
            while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
                text += cur();
                advance();
            }
        }
        if ((cur() == 'e' || cur() == 'E') &&
            (std::isdigit(static_cast<unsigned char>(ahead())) ||
             ((ahead() == '+' || ahead() == '-') && std::isdigit(static_cast<unsigned char>(ahead(2)))))) {
            is_double = true;
            text += cur();
            advance();
            if (cur() == '+' || cur() == '-') {
                text += cur();
                advance();
            }
            while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
                text += cur();
                advance();
            }
        }
        if (!any_digit) throw ParseError(line, col, "malformed number '" + text + "'");
        return make(is_double ? Token::Kind::Double : Token::Kind::Integer, std::move(text), line, col);
    }

    Token lex_name(int line, int col) {
        // Prefixed name: (prefix)? ':' (local)?  -- or the bare keyword "a".
        std::string prefix;
        while (!done() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_' || cur() == '-')) {
            prefix += cur();
            advance();
        }
        if (cur() != ':') {
            if (prefix == "a") return make(Token::Kind::A, "a", line, col);
            if (prefix == "true" || prefix == "false") {
                throw UnsupportedError(line, col, "boolean literal");
            }
            throw ParseError(line, col, "expected ':' in prefixed name after '" + prefix + "'");
        }
        advance();  // :
        std::string local;
        while (!done() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_' || cur() == '-')) {
            local += cur();
            advance();
        }
        return make(Token::Kind::PName, prefix + ":" + local, line, col);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    std::optional<Token> lookahead_;
};

class Parser {
public:
    Parser(std::string_view text, const PrefixMap& base) : lexer_(text), graph_(base) {}

    Graph run() {
        while (true) {
            const Token& t = lexer_.peek();
            if (t.kind == Token::Kind::Eof) break;
            if (t.kind == Token::Kind::PrefixDecl) {
                parse_prefix();
            } else {
                parse_triples();
            }
        }
        return std::move(graph_);
    }

private:
    void expect(Token::Kind kind, const char* what) {
        Token t = lexer_.next();
        if (t.kind != kind) {
            lexer_.fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
        }
    }

    void parse_prefix() {
        lexer_.next();  // @prefix
        Token name = lexer_.next();
        if (name.kind != Token::Kind::PName) {
            lexer_.fail(name, "expected prefix name in @prefix");
        }
        std::string prefix = name.text.substr(0, name.text.find(':'));
        if (name.text.find(':') != name.text.size() - 1) {
            lexer_.fail(name, "prefix declaration must end with ':'");
        }
        Token ns = lexer_.next();
        if (ns.kind != Token::Kind::IriRef) {
            lexer_.fail(ns, "expected <IRI> in @prefix");
        }
        expect(Token::Kind::Dot, "'.'");
        graph_.prefixes().set(prefix, ns.text);
    }

    Iri parse_iri(const Token& t) {
        try {
            if (t.kind == Token::Kind::IriRef) return Iri(t.text);
            if (t.kind == Token::Kind::PName) {
                auto expanded = graph_.prefixes().expand(t.text);
                if (!expanded) {
                    lexer_.fail(t, "unknown prefix in '" + t.text + "'");
                }
                return Iri(*expanded);
            }
        } catch (const Error& e) {
            throw ParseError(t.line, t.col, e.what());
        }
        lexer_.fail(t, "expected an IRI, got '" + t.text + "'");
    }

    Term parse_object() {
        Token t = lexer_.next();
        switch (t.kind) {
            case Token::Kind::IriRef:
            case Token::Kind::PName:
                return parse_iri(t);
            case Token::Kind::Integer:
                return make_literal(LiteralType::Integer, t);
            case Token::Kind::Double:
                return make_literal(LiteralType::Double, t);
            case Token::Kind::String: {
                if (lexer_.peek().kind == Token::Kind::CaretCaret) {
                    lexer_.next();
                    Token dt = lexer_.next();
                    Iri datatype = parse_iri(dt);
                    return make_literal(datatype_of(dt, datatype), t);
                }
                return Literal::str(t.text);
            }
            default:
                lexer_.fail(t, "expected an object (IRI or literal), got '" + t.text + "'");
        }
    }

    LiteralType datatype_of(const Token& at, const Iri& datatype) {
        if (datatype == vocab::kXsdString) return LiteralType::String;
        if (datatype == vocab::kXsdInteger) return LiteralType::Integer;
        if (datatype == vocab::kXsdDouble) return LiteralType::Double;
        if (datatype == vocab::kXsdDateTime) return LiteralType::DateTime;
        throw ParseError(at.line, at.col, "unsupported datatype <" + datatype.value() + ">");
    }

    Literal make_literal(LiteralType type, const Token& t) {
        try {
            return Literal::from_lexical(type, t.text);
        } catch (const Error& e) {
            throw ParseError(t.line, t.col, e.what());
        }
    }

    void parse_triples() {
        Token s = lexer_.next();
        Iri subject = parse_iri(s);
        while (true) {
            Token v = lexer_.next();
            Iri predicate =
                v.kind == Token::Kind::A ? vocab::kRdfType : parse_iri(v);
            while (true) {
                Term object = parse_object();
                graph_.insert(Triple{subject, predicate, object});
                if (lexer_.peek().kind != Token::Kind::Comma) break;
                lexer_.next();
            }
            Token sep = lexer_.next();
            if (sep.kind == Token::Kind::Dot) return;
            if (sep.kind != Token::Kind::Semi) {
                lexer_.fail(sep, "expected ';' or '.', got '" + sep.text + "'");
            }
            // Tolerate a trailing ';' before the closing '.'.
            if (lexer_.peek().kind == Token::Kind::Dot) {
                lexer_.next();
                return;
            }
        }
    }

    Lexer lexer_;
    Graph graph_;
};

std::string escape_string(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    static const char* hex = "0123456789ABCDEF";
                    unsigned char u = static_cast<unsigned char>(c);
                    out += "\\u00";
                    out += hex[u >> 4];
                    out += hex[u & 0xF];
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string render_iri(const Iri& iri, const PrefixMap& pm) {
    if (auto shrunk = pm.shrink(iri.value())) return *shrunk;
    return "<" + iri.value() + ">";
}

std::string render_datatype(const Iri& datatype, const PrefixMap& pm) {
    return "^^" + render_iri(datatype, pm);
}

std::string render_object(const Term& term, const PrefixMap& pm) {
    if (const Iri* iri = as_iri(term)) return render_iri(*iri, pm);
    const Literal& lit = std::get<Literal>(term);
    switch (lit.type()) {
        case LiteralType::String:
            return "\"" + escape_string(lit.lexical()) + "\"";
        case LiteralType::Integer:
            return lit.lexical();
        case LiteralType::Double:
            return "\"" + lit.lexical() + "\"" + render_datatype(vocab::kXsdDouble, pm);
        case LiteralType::DateTime:
            return "\"" + lit.lexical() + "\"" + render_datatype(vocab::kXsdDateTime, pm);
    }
    return "";
}

}  // namespace

Graph parse_turtle(std::string_view text) {
    return parse_turtle(text, PrefixMap::defaults());
}

Graph parse_turtle(std::string_view text, const PrefixMap& base) {
    return Parser(text, base).run();
}

std::string serialize_turtle(const Graph& g) {
    return serialize_turtle(g, g.prefixes());
}

std::string serialize_turtle(const Graph& g, const PrefixMap& prefixes) {
    std::ostringstream out;
    for (const auto& [prefix, ns] : prefixes.entries()) {
        out << "@prefix " << prefix << ": <" << ns << "> .\n";
    }

    // subject -> predicate sort key -> sorted rendered objects.
    // rdf:type sorts first via the \x00 key and prints as "a".
    std::map<Iri, std::map<std::string, std::map<std::string, std::string>>> grouped;
    for (const Triple& t : g.triples()) {
        std::string pred_key =
            t.predicate == vocab::kRdfType ? std::string("\x00", 1) : "p" + t.predicate.value();
        grouped[t.subject][pred_key][term_key(t.object)] = render_object(t.object, prefixes);
    }

    for (const auto& [subject, preds] : grouped) {
        out << "\n" << render_iri(subject, prefixes);
        bool first_pred = true;
        for (const auto& [pred_key, objects] : preds) {
            out << (first_pred ? " " : " ;\n    ");
            first_pred = false;
            if (pred_key[0] == '\x00') {
                out << "a ";
            } else {
                out << render_iri(Iri(pred_key.substr(1)), prefixes) << " ";
            }
            bool first_obj = true;
            for (const auto& [key, rendered] : objects) {
                (void)key;
                if (!first_obj) out << ", ";
                first_obj = false;
                out << rendered;
            }
        }
        out << " .\n";
    }
    return out.str();
}

}  // namespace annetto
