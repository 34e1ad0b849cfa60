#include "annetto/query.hpp"

#include "annetto/vocab.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace annetto {

namespace {

using Binding = std::map<std::string, Term>;

const Term* lookup(const Binding& binding, const PatternTerm& pt) {
    if (const Term* t = as_constant(pt)) return t;
    auto it = binding.find(as_variable(pt)->name);
    return it == binding.end() ? nullptr : &it->second;
}

bool bind_or_check(Binding& binding, const PatternTerm& pt, const Term& value) {
    if (const Term* t = as_constant(pt)) return *t == value;
    auto [it, inserted] = binding.emplace(as_variable(pt)->name, value);
    return inserted || it->second == value;
}

bool is_type_pattern(const TriplePattern& p) {
    const Term* pred = as_constant(p.predicate);
    if (!pred || p.path_plus) return false;
    const Iri* iri = as_iri(*pred);
    if (!iri || !(*iri == vocab::kRdfType)) return false;
    const Term* obj = as_constant(p.object);
    return obj && as_iri(*obj) != nullptr;
}

// All p-successors of a node, in graph order.
std::vector<Iri> successors(const Graph& g, const Iri& node, const Iri& p) {
    std::vector<Iri> out;
    for (const Triple& t : g.match(node, p, std::nullopt)) {
        if (const Iri* o = as_iri(t.object)) out.push_back(*o);
    }
    return out;
}

std::vector<Iri> predecessors(const Graph& g, const Iri& node, const Iri& p) {
    std::vector<Iri> out;
    for (const Triple& t : g.match(std::nullopt, p, Term{node})) {
        out.push_back(t.subject);
    }
    return out;
}

// Nodes reachable from start via 1..n p-edges; cycle-safe.
std::set<Iri> reachable(const Graph& g, const Iri& start, const Iri& p, bool forward) {
    std::set<Iri> seen;
    std::deque<Iri> frontier{start};
    std::set<Iri> expanded;
    while (!frontier.empty()) {
        Iri node = frontier.front();
        frontier.pop_front();
        if (!expanded.insert(node).second) continue;
        std::vector<Iri> next = forward ? successors(g, node, p) : predecessors(g, node, p);
        for (const Iri& n : next) {
            seen.insert(n);
            frontier.push_back(n);
        }
    }
    return seen;
}

// Matches one path pattern (s p+ o) against the current bindings.
std::vector<Binding> match_path(const GroupPattern&, const KB& kb, const TriplePattern& pattern,
                                const Binding& binding) {
    const Iri& p = *as_iri(*as_constant(pattern.predicate));
    const Graph& g = kb.graph;
    std::vector<Binding> out;

    const Term* s = lookup(binding, pattern.subject);
    const Term* o = lookup(binding, pattern.object);
    if (s && !as_iri(*s)) return {};  // literal subjects match nothing

    if (s && o) {
        const Iri* oi = as_iri(*o);
        if (oi && reachable(g, *as_iri(*s), p, true).count(*oi)) out.push_back(binding);
        return out;
    }
    if (s) {
        for (const Iri& target : reachable(g, *as_iri(*s), p, true)) {
            Binding b = binding;
            if (bind_or_check(b, pattern.object, Term{target})) out.push_back(std::move(b));
        }
        return out;
    }
    if (o) {
        const Iri* oi = as_iri(*o);
        if (!oi) return {};
        for (const Iri& source : reachable(g, *oi, p, false)) {
            Binding b = binding;
            if (bind_or_check(b, pattern.subject, Term{source})) out.push_back(std::move(b));
        }
        return out;
    }
    // Both ends free: enumerate sources that have at least one p-edge.
    std::set<Iri> sources;
    for (const Triple& t : g.match(std::nullopt, p, std::nullopt)) {
        sources.insert(t.subject);
    }
    for (const Iri& source : sources) {
        for (const Iri& target : reachable(g, source, p, true)) {
            Binding b = binding;
            if (bind_or_check(b, pattern.subject, Term{source}) &&
                bind_or_check(b, pattern.object, Term{target})) {
                out.push_back(std::move(b));
            }
        }
    }
    return out;
}

// Type patterns match any individual whose inferred types include the class.
std::vector<Binding> match_type(const KB& kb, const TriplePattern& pattern, const Binding& binding) {
    const Iri& cls = *as_iri(*as_constant(pattern.object));
    std::vector<Binding> out;
    const Term* s = lookup(binding, pattern.subject);
    if (s) {
        const Iri* si = as_iri(*s);
        if (si && has_type(kb, *si, cls)) out.push_back(binding);
        return out;
    }
    for (const Iri& individual : instances_of(kb, cls)) {
        Binding b = binding;
        if (bind_or_check(b, pattern.subject, Term{individual})) out.push_back(std::move(b));
    }
    return out;
}

std::vector<Binding> match_plain(const KB& kb, const TriplePattern& pattern, const Binding& binding) {
    const Term* s = lookup(binding, pattern.subject);
    const Term* p = lookup(binding, pattern.predicate);
    const Term* o = lookup(binding, pattern.object);

    std::optional<Iri> ms, mp;
    if (s) {
        const Iri* si = as_iri(*s);
        if (!si) return {};
        ms = *si;
    }
    if (p) {
        const Iri* pi = as_iri(*p);
        if (!pi) return {};
        mp = *pi;
    }
    std::optional<Term> mo;
    if (o) mo = *o;

    std::vector<Binding> out;
    for (const Triple& t : kb.graph.match(ms, mp, mo)) {
        Binding b = binding;
        if (bind_or_check(b, pattern.subject, Term{t.subject}) &&
            bind_or_check(b, pattern.predicate, Term{t.predicate}) &&
            bind_or_check(b, pattern.object, t.object)) {
            out.push_back(std::move(b));
        }
    }
    return out;
}

// Comparison semantics: numerics compare numerically (integer/double mix
// allowed), strings and dateTimes lexically, IRIs support = and != only.
// Any other pairing, or an unbound operand, makes the row fail.
bool compare_terms_for_filter(const Term& lhs, CompareOp op, const Term& rhs) {
    const Iri* li = as_iri(lhs);
    const Iri* ri = as_iri(rhs);
    if (li || ri) {
        if (!li || !ri) return false;
        if (op == CompareOp::Eq) return *li == *ri;
        if (op == CompareOp::Ne) return !(*li == *ri);
        return false;
    }
    const Literal& ll = *as_literal(lhs);
    const Literal& rl = *as_literal(rhs);
    int cmp = 0;
    if (ll.is_numeric() && rl.is_numeric()) {
        double a = ll.numeric_value(), b = rl.numeric_value();
        cmp = a < b ? -1 : (a > b ? 1 : 0);
    } else if (ll.type() == rl.type() &&
               (ll.type() == LiteralType::String || ll.type() == LiteralType::DateTime)) {
        cmp = ll.lexical().compare(rl.lexical());
        cmp = cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
    } else {
        return false;
    }
    switch (op) {
        case CompareOp::Eq: return cmp == 0;
        case CompareOp::Ne: return cmp != 0;
        case CompareOp::Lt: return cmp < 0;
        case CompareOp::Gt: return cmp > 0;
        case CompareOp::Le: return cmp <= 0;
        case CompareOp::Ge: return cmp >= 0;
    }
    return false;
}

bool passes_filter(const Binding& binding, const Comparison& cmp) {
    const Term* lhs = lookup(binding, cmp.lhs);
    const Term* rhs = lookup(binding, cmp.rhs);
    if (!lhs || !rhs) return false;
    return compare_terms_for_filter(*lhs, cmp.op, *rhs);
}

std::vector<Binding> join_tables(const std::vector<Binding>& left, const ResultTable& right) {
    std::vector<Binding> out;
    for (const Binding& b : left) {
        for (const std::vector<Term>& row : right.rows) {
            Binding merged = b;
            bool ok = true;
            for (std::size_t i = 0; i < right.header.size(); ++i) {
                auto [it, inserted] = merged.emplace(right.header[i], row[i]);
                if (!inserted && !(it->second == row[i])) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(std::move(merged));
        }
    }
    return out;
}

}  // namespace

ResultTable evaluate(const QueryAst& ast, const KB& kb) {
    std::vector<Binding> bindings{Binding{}};

    for (const TriplePattern& pattern : ast.where.patterns) {
        std::vector<Binding> next;
        for (const Binding& b : bindings) {
            std::vector<Binding> matched;
            if (pattern.path_plus) {
                matched = match_path(ast.where, kb, pattern, b);
            } else if (is_type_pattern(pattern)) {
                matched = match_type(kb, pattern, b);
            } else {
                matched = match_plain(kb, pattern, b);
            }
            next.insert(next.end(), std::make_move_iterator(matched.begin()),
                        std::make_move_iterator(matched.end()));
        }
        bindings = std::move(next);
        if (bindings.empty()) break;
    }

    for (const QueryAst& sub : ast.where.subselects) {
        ResultTable inner = evaluate(sub, kb);
        bindings = join_tables(bindings, inner);
        if (bindings.empty()) break;
    }

    for (const Comparison& filter : ast.where.filters) {
        std::vector<Binding> kept;
        for (const Binding& b : bindings) {
            if (passes_filter(b, filter)) kept.push_back(b);
        }
        bindings = std::move(kept);
    }

    ResultTable table;
    for (const SelectItem& item : ast.select) {
        table.header.push_back(item.variable.name);
    }

    if (!ast.group_by.empty()) {
        // Group key -> rows of the group.
        std::map<std::vector<std::string>, std::vector<const Binding*>> groups;
        for (const Binding& b : bindings) {
            std::vector<std::string> key;
            bool complete = true;
            for (const Variable& g : ast.group_by) {
                auto it = b.find(g.name);
                if (it == b.end()) {
                    complete = false;
                    break;
                }
                key.push_back(term_key(it->second));
            }
            if (complete) groups[key].push_back(&b);
        }
        for (const auto& [key, members] : groups) {
            (void)key;
            const Binding& representative = *members.front();
            std::vector<Term> row;
            Binding grouped_row;
            for (const SelectItem& item : ast.select) {
                if (item.is_count) {
                    std::int64_t count = 0;
                    for (const Binding* m : members) {
                        if (m->count(item.count_argument.name)) ++count;
                    }
                    Term value{Literal::integer(count)};
                    row.push_back(value);
                    grouped_row.emplace(item.variable.name, value);
                } else {
                    Term value = representative.at(item.variable.name);
                    row.push_back(value);
                    grouped_row.emplace(item.variable.name, value);
                }
            }
            if (ast.having && !passes_filter(grouped_row, *ast.having)) continue;
            table.rows.push_back(std::move(row));
        }
    } else {
        for (const Binding& b : bindings) {
            std::vector<Term> row;
            bool complete = true;
            for (const SelectItem& item : ast.select) {
                auto it = b.find(item.variable.name);
                if (it == b.end()) {
                    complete = false;
                    break;
                }
                row.push_back(it->second);
            }
            if (complete) table.rows.push_back(std::move(row));
        }
    }

    auto row_less = [](const std::vector<Term>& a, const std::vector<Term>& b) {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            std::string ka = term_key(a[i]), kb = term_key(b[i]);
            if (ka != kb) return ka < kb;
        }
        return a.size() < b.size();
    };
    std::sort(table.rows.begin(), table.rows.end(), row_less);

    if (ast.distinct) {
        table.rows.erase(std::unique(table.rows.begin(), table.rows.end(),
                                     [](const std::vector<Term>& a, const std::vector<Term>& b) {
                                         return a == b;
                                     }),
                         table.rows.end());
    }
    return table;
}

std::string render_term(const Term& term, const PrefixMap& prefixes) {
    if (const Iri* iri = as_iri(term)) {
        if (auto shrunk = prefixes.shrink(iri->value())) return *shrunk;
        return iri->value();
    }
    return as_literal(term)->lexical();
}

std::string table_to_csv(const ResultTable& table, const PrefixMap& prefixes) {
    auto quote = [](const std::string& field) {
        if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
        std::string out = "\"";
        for (char c : field) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out << (i ? "," : "") << quote(table.header[i]);
    }
    out << "\n";
    for (const std::vector<Term>& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << quote(render_term(row[i], prefixes));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace annetto
