#pragma once

#include "annetto/kb.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace annetto {

struct Variable {
    std::string name;  // without the leading '?'

    bool operator==(const Variable&) const = default;
    auto operator<=>(const Variable&) const = default;
};

// A pattern position: a variable or a constant term.
using PatternTerm = std::variant<Variable, Term>;

inline const Variable* as_variable(const PatternTerm& p) { return std::get_if<Variable>(&p); }
inline const Term* as_constant(const PatternTerm& p) { return std::get_if<Term>(&p); }

struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    // One-or-more path step ("p+"); only valid on constant IRI predicates.
    bool path_plus = false;
    PatternTerm object;
};

enum class CompareOp { Eq, Ne, Lt, Gt, Le, Ge };

struct Comparison {
    PatternTerm lhs;
    CompareOp op;
    PatternTerm rhs;
};

struct SelectItem {
    // Plain projected variable, or count(?arg) as ?alias.
    Variable variable;
    bool is_count = false;
    Variable count_argument;
};

struct QueryAst;

struct GroupPattern {
    std::vector<TriplePattern> patterns;
    std::vector<Comparison> filters;
    std::vector<QueryAst> subselects;
};

struct QueryAst {
    std::vector<SelectItem> select;
    bool distinct = false;
    GroupPattern where;
    std::vector<Variable> group_by;
    std::optional<Comparison> having;
};

// Parses the SPARQL subset: SELECT (optionally DISTINCT) with plain
// variables and count(?x) as ?alias, basic graph patterns with ";" and ","
// lists and the "a" keyword, "+"-paths on IRI predicates, FILTER
// comparisons, nested subselects, GROUP BY and HAVING. PREFIX declarations
// extend the base prefix map. Anything else raises UnsupportedError.
QueryAst parse_query(std::string_view text);
QueryAst parse_query(std::string_view text, const PrefixMap& base);

struct ResultTable {
    std::vector<std::string> header;           // projected variable names
    std::vector<std::vector<Term>> rows;       // one term per header column
};

// Evaluates the query: bag-semantics joins over the patterns where type
// patterns (?x a C) match via inferred types, "p+" matches 1..n step paths,
// subselects join on shared variables, then filters, grouping/HAVING,
// DISTINCT, and a final lexicographic row sort for deterministic output.
ResultTable evaluate(const QueryAst& ast, const KB& kb);

// Plain-text renderings of a single term: prefixed IRI when possible,
// canonical lexical form for literals.
std::string render_term(const Term& term, const PrefixMap& prefixes);

// RFC-4180 CSV with a header row.
std::string table_to_csv(const ResultTable& table, const PrefixMap& prefixes);

}  // namespace annetto
