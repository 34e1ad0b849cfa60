#include "annetto/query.hpp"

#include "annetto/errors.hpp"
#include "annetto/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace annetto {

namespace {

const std::set<std::string> kUnsupportedKeywords = {
    "construct", "ask", "describe", "insert", "delete", "optional", "union",
    "minus", "order", "limit", "offset", "bind", "values", "graph",
    "service", "exists", "not", "reduced", "from",
};

struct Token {
    enum class Kind {
        Eof, LBrace, RBrace, LParen, RParen, Dot, Semi, Comma, Plus,
        Var, IriRef, PName, A, Keyword, String, Integer, Double, CompareOp,
    };
    Kind kind = Kind::Eof;
    std::string text;  // keywords lowercased
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

    Token make(Token::Kind k, std::string text, int line, int col) {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.line = line;
        t.col = col;
        return t;
    }

    Token lex() {
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
        int line = line_, col = col_;
        if (done()) return make(Token::Kind::Eof, "", line, col);
        char c = cur();

        switch (c) {
            case '{': advance(); return make(Token::Kind::LBrace, "{", line, col);
            case '}': advance(); return make(Token::Kind::RBrace, "}", line, col);
            case '(': advance(); return make(Token::Kind::LParen, "(", line, col);
            case ')': advance(); return make(Token::Kind::RParen, ")", line, col);
            case '.': advance(); return make(Token::Kind::Dot, ".", line, col);
            case ';': advance(); return make(Token::Kind::Semi, ";", line, col);
            case ',': advance(); return make(Token::Kind::Comma, ",", line, col);
            case '+':
                if (!std::isdigit(static_cast<unsigned char>(ahead()))) {
                    advance();
                    return make(Token::Kind::Plus, "+", line, col);
                }
                break;
            default: break;
        }
        if (c == '=') {
            advance();
            return make(Token::Kind::CompareOp, "=", line, col);
        }
        if (c == '!' && ahead() == '=') {
            advance();
            advance();
            return make(Token::Kind::CompareOp, "!=", line, col);
        }
        if (c == '<') {
            // Either an IRI reference or a comparison operator.
            char n = ahead();
            if (n == '=') {
                advance();
                advance();
                return make(Token::Kind::CompareOp, "<=", line, col);
            }
            if (std::isspace(static_cast<unsigned char>(n)) || n == '?' || n == '$' || n == '-' ||
                n == '"' || n == ':' || std::isdigit(static_cast<unsigned char>(n))) {
                advance();
                return make(Token::Kind::CompareOp, "<", line, col);
            }
            return lex_iriref(line, col);
        }
        if (c == '>') {
            advance();
            if (cur() == '=') {
                advance();
                return make(Token::Kind::CompareOp, ">=", line, col);
            }
            return make(Token::Kind::CompareOp, ">", line, col);
        }
        if (c == '?' || c == '$') {
            advance();
            std::string name;
            while (!done() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
                name += cur();
                advance();
            }
            if (name.empty()) throw ParseError(line, col, "empty variable name");
            return make(Token::Kind::Var, std::move(name), line, col);
        }
        if (c == '"') return lex_string(line, col);
        if (c == '\'') throw UnsupportedError(line, col, "single-quoted string");
        if (c == '_' && ahead() == ':') throw UnsupportedError(line, col, "blank node");
        if (c == '[' || c == ']') throw UnsupportedError(line, col, "blank node");
        if (c == '*') throw UnsupportedError(line, col, "select *");
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            return lex_number(line, col);
        }
        if (c == ':' || c == '_' || std::isalpha(static_cast<unsigned char>(c))) {
            return lex_word(line, col);
        }
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
        advance();
        return make(Token::Kind::IriRef, std::move(value), line, col);
    }

    Token lex_string(int line, int col) {
        advance();  // "
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
                    case '"': value += '"'; break;
                    case '\\': value += '\\'; break;
                    default: throw ParseError(line_, col_, std::string("unknown escape '\\") + e + "'");
                }
                advance();
                continue;
            }
            value += c;
            advance();
        }
        return make(Token::Kind::String, std::move(value), line, col);
    }

    Token lex_number(int line, int col) {
        std::string text;
        if (cur() == '+' || cur() == '-') {
            text += cur();
            advance();
        }
        bool any = false, is_double = false;
        while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
            text += cur();
            advance();
            any = true;
        }
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
        if (!any) throw ParseError(line, col, "malformed number");
        return make(is_double ? Token::Kind::Double : Token::Kind::Integer, std::move(text), line, col);
    }

    Token lex_word(int line, int col) {
        std::string word;
        while (!done() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_' || cur() == '-')) {
            word += cur();
            advance();
        }
        if (cur() == ':') {
            advance();
            std::string local;
            while (!done() &&
                   (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_' || cur() == '-')) {
                local += cur();
                advance();
            }
            return make(Token::Kind::PName, word + ":" + local, line, col);
        }
        std::string lowered = word;
        std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                       [](unsigned char ch) { return std::tolower(ch); });
        if (lowered == "a" && word == "a") return make(Token::Kind::A, "a", line, col);
        return make(Token::Kind::Keyword, std::move(lowered), line, col);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    std::optional<Token> lookahead_;
};

class Parser {
public:
    Parser(std::string_view text, const PrefixMap& base) : lexer_(text), prefixes_(base) {}

    QueryAst run() {
        parse_prologue();
        QueryAst ast = parse_select_query();
        Token t = lexer_.next();
        if (t.kind != Token::Kind::Eof) {
            lexer_.fail(t, "unexpected trailing input '" + t.text + "'");
        }
        return ast;
    }

private:
    void parse_prologue() {
        while (lexer_.peek().kind == Token::Kind::Keyword && lexer_.peek().text == "prefix") {
            lexer_.next();
            Token name = lexer_.next();
            if (name.kind != Token::Kind::PName || name.text.back() != ':') {
                lexer_.fail(name, "expected 'prefix:' in PREFIX declaration");
            }
            Token iri = lexer_.next();
            if (iri.kind != Token::Kind::IriRef) {
                lexer_.fail(iri, "expected <IRI> in PREFIX declaration");
            }
            prefixes_.set(name.text.substr(0, name.text.size() - 1), iri.text);
        }
    }

    void expect_keyword(const char* kw) {
        Token t = lexer_.next();
        if (t.kind != Token::Kind::Keyword || t.text != kw) {
            lexer_.fail(t, std::string("expected '") + kw + "', got '" + t.text + "'");
        }
    }

    void expect(Token::Kind kind, const char* what) {
        Token t = lexer_.next();
        if (t.kind != kind) {
            lexer_.fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
        }
    }

    QueryAst parse_select_query() {
        Token head = lexer_.next();
        if (head.kind != Token::Kind::Keyword || head.text != "select") {
            if (head.kind == Token::Kind::Keyword && kUnsupportedKeywords.count(head.text)) {
                throw UnsupportedError(head.line, head.col, head.text);
            }
            lexer_.fail(head, "expected 'select', got '" + head.text + "'");
        }

        QueryAst ast;
        if (lexer_.peek().kind == Token::Kind::Keyword && lexer_.peek().text == "distinct") {
            lexer_.next();
            ast.distinct = true;
        }

        bool any_count = false;
        while (true) {
            const Token& t = lexer_.peek();
            if (t.kind == Token::Kind::Var) {
                Token var = lexer_.next();
                ast.select.push_back(SelectItem{Variable{var.text}, false, {}});
            } else if (t.kind == Token::Kind::LParen) {
                ast.select.push_back(parse_count_item());
                any_count = true;
            } else {
                break;
            }
        }
        if (ast.select.empty()) {
            lexer_.fail(lexer_.peek(), "select list is empty");
        }

        expect_keyword("where");
        Token brace = lexer_.next();
        if (brace.kind != Token::Kind::LBrace) {
            lexer_.fail(brace, "expected '{' after 'where'");
        }
        ast.where = parse_group();

        if (lexer_.peek().kind == Token::Kind::Keyword && lexer_.peek().text == "group") {
            lexer_.next();
            expect_keyword("by");
            while (lexer_.peek().kind == Token::Kind::Var) {
                ast.group_by.push_back(Variable{lexer_.next().text});
            }
            if (ast.group_by.empty()) {
                lexer_.fail(lexer_.peek(), "GROUP BY needs at least one variable");
            }
        }
        if (lexer_.peek().kind == Token::Kind::Keyword && lexer_.peek().text == "having") {
            Token kw = lexer_.next();
            if (ast.group_by.empty()) {
                lexer_.fail(kw, "HAVING requires GROUP BY");
            }
            expect(Token::Kind::LParen, "'('");
            ast.having = parse_comparison();
            expect(Token::Kind::RParen, "')'");
        }

        validate_select(ast, any_count);
        return ast;
    }

    SelectItem parse_count_item() {
        Token open = lexer_.next();  // (
        Token fn = lexer_.next();
        if (fn.kind != Token::Kind::Keyword || fn.text != "count") {
            if (fn.kind == Token::Kind::Keyword &&
                (fn.text == "sum" || fn.text == "avg" || fn.text == "min" || fn.text == "max" ||
                 fn.text == "sample" || fn.text == "group_concat")) {
                throw UnsupportedError(fn.line, fn.col, "aggregate " + fn.text);
            }
            lexer_.fail(fn, "expected 'count' in aggregate expression");
        }
        (void)open;
        expect(Token::Kind::LParen, "'('");
        Token arg = lexer_.next();
        if (arg.kind != Token::Kind::Var) {
            lexer_.fail(arg, "expected a variable inside count()");
        }
        expect(Token::Kind::RParen, "')'");
        expect_keyword("as");
        Token alias = lexer_.next();
        if (alias.kind != Token::Kind::Var) {
            lexer_.fail(alias, "expected an alias variable after 'as'");
        }
        expect(Token::Kind::RParen, "')'");
        SelectItem item;
        item.variable = Variable{alias.text};
        item.is_count = true;
        item.count_argument = Variable{arg.text};
        return item;
    }

    GroupPattern parse_group() {
        GroupPattern group;
        while (true) {
            const Token& t = lexer_.peek();
            if (t.kind == Token::Kind::RBrace) {
                lexer_.next();
                break;
            }
            if (t.kind == Token::Kind::Eof) {
                lexer_.fail(t, "unterminated group pattern, expected '}'");
            }
            if (t.kind == Token::Kind::Keyword && t.text == "filter") {
                lexer_.next();
                expect(Token::Kind::LParen, "'(' after FILTER");
                group.filters.push_back(parse_comparison());
                expect(Token::Kind::RParen, "')'");
                consume_optional_dot();
                continue;
            }
            if (t.kind == Token::Kind::LBrace) {
                lexer_.next();
                group.subselects.push_back(parse_select_query());
                expect(Token::Kind::RBrace, "'}' closing subselect");
                consume_optional_dot();
                continue;
            }
            if (t.kind == Token::Kind::Keyword) {
                if (kUnsupportedKeywords.count(t.text)) {
                    throw UnsupportedError(t.line, t.col, t.text);
                }
                lexer_.fail(t, "unexpected keyword '" + t.text + "' in group pattern");
            }
            parse_triples_block(group);
        }
        return group;
    }

    void consume_optional_dot() {
        if (lexer_.peek().kind == Token::Kind::Dot) lexer_.next();
    }

    void parse_triples_block(GroupPattern& group) {
        PatternTerm subject = parse_pattern_term("subject");
        while (true) {
            TriplePattern pattern;
            pattern.subject = subject;
            parse_verb(pattern);
            while (true) {
                pattern.object = parse_pattern_term("object");
                group.patterns.push_back(pattern);
                if (lexer_.peek().kind != Token::Kind::Comma) break;
                lexer_.next();
            }
            const Token& sep = lexer_.peek();
            if (sep.kind == Token::Kind::Semi) {
                lexer_.next();
                // A ';' may be trailing: the statement ends at '.' or '}'.
                if (lexer_.peek().kind == Token::Kind::Dot) {
                    lexer_.next();
                    return;
                }
                if (lexer_.peek().kind == Token::Kind::RBrace) return;
                continue;
            }
            if (sep.kind == Token::Kind::Dot) {
                lexer_.next();
                return;
            }
            if (sep.kind == Token::Kind::RBrace) return;  // final '.' is optional
            lexer_.fail(sep, "expected '.', ';' or '}', got '" + sep.text + "'");
        }
    }

    void parse_verb(TriplePattern& pattern) {
        Token t = lexer_.next();
        if (t.kind == Token::Kind::A) {
            pattern.predicate = Term{vocab::kRdfType};
            return;
        }
        if (t.kind == Token::Kind::Var) {
            pattern.predicate = Variable{t.text};
            if (lexer_.peek().kind == Token::Kind::Plus) {
                lexer_.fail(lexer_.peek(), "path '+' applies only to IRI predicates");
            }
            return;
        }
        if (t.kind == Token::Kind::PName || t.kind == Token::Kind::IriRef) {
            pattern.predicate = Term{resolve_iri(t)};
            if (lexer_.peek().kind == Token::Kind::Plus) {
                lexer_.next();
                pattern.path_plus = true;
            }
            return;
        }
        lexer_.fail(t, "expected a predicate, got '" + t.text + "'");
    }

    PatternTerm parse_pattern_term(const char* position) {
        Token t = lexer_.next();
        switch (t.kind) {
            case Token::Kind::Var:
                return Variable{t.text};
            case Token::Kind::PName:
            case Token::Kind::IriRef:
                return Term{resolve_iri(t)};
            case Token::Kind::String:
                return Term{Literal::str(t.text)};
            case Token::Kind::Integer:
                return Term{make_literal(LiteralType::Integer, t)};
            case Token::Kind::Double:
                return Term{make_literal(LiteralType::Double, t)};
            default:
                lexer_.fail(t, std::string("expected a ") + position + ", got '" + t.text + "'");
        }
    }

    Comparison parse_comparison() {
        Comparison cmp;
        cmp.lhs = parse_pattern_term("comparison operand");
        Token op = lexer_.next();
        if (op.kind != Token::Kind::CompareOp) {
            lexer_.fail(op, "expected a comparison operator, got '" + op.text + "'");
        }
        if (op.text == "=") cmp.op = CompareOp::Eq;
        else if (op.text == "!=") cmp.op = CompareOp::Ne;
        else if (op.text == "<") cmp.op = CompareOp::Lt;
        else if (op.text == ">") cmp.op = CompareOp::Gt;
        else if (op.text == "<=") cmp.op = CompareOp::Le;
        else cmp.op = CompareOp::Ge;
        cmp.rhs = parse_pattern_term("comparison operand");
        return cmp;
    }

    Iri resolve_iri(const Token& t) {
        try {
            if (t.kind == Token::Kind::IriRef) return Iri(t.text);
            auto expanded = prefixes_.expand(t.text);
            if (!expanded) {
                lexer_.fail(t, "unknown prefix in '" + t.text + "'");
            }
            return Iri(*expanded);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(t.line, t.col, e.what());
        }
    }

    Literal make_literal(LiteralType type, const Token& t) {
        try {
            return Literal::from_lexical(type, t.text);
        } catch (const Error& e) {
            throw ParseError(t.line, t.col, e.what());
        }
    }

    // Projected plain variables must be visible in the group; aggregate
    // aliases must be fresh; with GROUP BY, plain projections must be
    // grouping variables.
    void validate_select(const QueryAst& ast, bool any_count) {
        std::set<std::string> visible;
        for (const TriplePattern& p : ast.where.patterns) {
            for (const PatternTerm* t : {&p.subject, &p.predicate, &p.object}) {
                if (const Variable* v = as_variable(*t)) visible.insert(v->name);
            }
        }
        for (const QueryAst& sub : ast.where.subselects) {
            for (const SelectItem& item : sub.select) visible.insert(item.variable.name);
        }
        for (const SelectItem& item : ast.select) {
            if (item.is_count) {
                if (visible.count(item.variable.name)) {
                    throw Error("aggregate alias ?" + item.variable.name + " is not fresh");
                }
                if (!visible.count(item.count_argument.name)) {
                    throw Error("count argument ?" + item.count_argument.name +
                                " is not visible in the where clause");
                }
            } else {
                if (!visible.count(item.variable.name)) {
                    throw Error("projected variable ?" + item.variable.name +
                                " is not visible in the where clause");
                }
                if (!ast.group_by.empty()) {
                    bool grouped = std::any_of(ast.group_by.begin(), ast.group_by.end(),
                                               [&](const Variable& g) { return g == item.variable; });
                    if (!grouped) {
                        throw Error("projected variable ?" + item.variable.name +
                                    " must appear in GROUP BY");
                    }
                }
            }
        }
        if (any_count && ast.group_by.empty()) {
            throw Error("aggregates require GROUP BY");
        }
    }

    Lexer lexer_;
    PrefixMap prefixes_;
};

}  // namespace

QueryAst parse_query(std::string_view text) {
    return parse_query(text, PrefixMap::defaults());
}

QueryAst parse_query(std::string_view text, const PrefixMap& base) {
    return Parser(text, base).run();
}

}  // namespace annetto
