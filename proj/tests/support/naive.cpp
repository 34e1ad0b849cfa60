#include "support/naive.hpp"

#include "annetto/vocab.hpp"

#include <algorithm>
#include <map>

namespace annetto::testsupport {

namespace {

using Assignment = std::map<std::string, Term>;

std::vector<Term> term_universe(const Graph& g) {
    std::map<std::string, Term> seen;
    for (const Triple& t : g.triples()) {
        seen.emplace(term_key(Term{t.subject}), Term{t.subject});
        seen.emplace(term_key(Term{t.predicate}), Term{t.predicate});
        seen.emplace(term_key(t.object), t.object);
    }
    std::vector<Term> out;
    for (auto& [key, term] : seen) {
        (void)key;
        out.push_back(term);
    }
    return out;
}

std::vector<std::string> pattern_variables(const GroupPattern& where) {
    std::vector<std::string> vars;
    auto add = [&vars](const PatternTerm& pt) {
        if (const Variable* v = as_variable(pt)) {
            if (std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
                vars.push_back(v->name);
            }
        }
    };
    for (const TriplePattern& p : where.patterns) {
        add(p.subject);
        add(p.predicate);
        add(p.object);
    }
    return vars;
}

Term substitute(const PatternTerm& pt, const Assignment& a) {
    if (const Term* t = as_constant(pt)) return *t;
    return a.at(as_variable(pt)->name);
}

bool triple_asserted(const Graph& g, const Term& s, const Term& p, const Term& o) {
    const Iri* si = as_iri(s);
    const Iri* pi = as_iri(p);
    if (!si || !pi) return false;
    for (const Triple& t : g.triples()) {
        if (t.subject == *si && t.predicate == *pi && t.object == o) return true;
    }
    return false;
}

bool type_holds(const KB& kb, const Term& subject, const Iri& cls) {
    const Iri* si = as_iri(subject);
    if (!si) return false;
    for (const Triple& t : kb.graph.triples()) {
        if (!(t.subject == *si) || !(t.predicate == vocab::kRdfType)) continue;
        const Iri* asserted = as_iri(t.object);
        if (!asserted) continue;
        if (*asserted == cls) return true;
        if (kb.schema.has_class(*asserted) && kb.schema.superclosure(*asserted).count(cls)) {
            return true;
        }
    }
    return false;
}

bool is_type_pattern(const TriplePattern& p) {
    const Term* pred = as_constant(p.predicate);
    if (!pred || p.path_plus) return false;
    const Iri* iri = as_iri(*pred);
    if (!iri || !(*iri == vocab::kRdfType)) return false;
    const Term* obj = as_constant(p.object);
    return obj && as_iri(*obj) != nullptr;
}

bool pattern_holds(const KB& kb, const TriplePattern& p, const Assignment& a,
                   const std::map<std::string, std::set<std::pair<Iri, Iri>>>& closures) {
    Term s = substitute(p.subject, a);
    Term o = substitute(p.object, a);
    if (p.path_plus) {
        const Iri* si = as_iri(s);
        const Iri* oi = as_iri(o);
        if (!si || !oi) return false;
        const Iri& pred = *as_iri(*as_constant(p.predicate));
        return closures.at(pred.value()).count({*si, *oi}) != 0;
    }
    if (is_type_pattern(p)) {
        return type_holds(kb, s, *as_iri(*as_constant(p.object)));
    }
    Term pred = substitute(p.predicate, a);
    return triple_asserted(kb.graph, s, pred, o);
}

int compare_literals(const Literal& a, const Literal& b, bool& comparable) {
    comparable = true;
    if (a.is_numeric() && b.is_numeric()) {
        double x = a.numeric_value(), y = b.numeric_value();
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    if (a.type() == b.type() &&
        (a.type() == LiteralType::String || a.type() == LiteralType::DateTime)) {
        int c = a.lexical().compare(b.lexical());
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    comparable = false;
    return 0;
}

bool filter_holds(const Comparison& cmp, const Assignment& a) {
    const Term* lhs_term = nullptr;
    const Term* rhs_term = nullptr;
    Term lhs_storage, rhs_storage;
    if (const Term* t = as_constant(cmp.lhs)) {
        lhs_term = t;
    } else {
        auto it = a.find(as_variable(cmp.lhs)->name);
        if (it == a.end()) return false;
        lhs_storage = it->second;
        lhs_term = &lhs_storage;
    }
    if (const Term* t = as_constant(cmp.rhs)) {
        rhs_term = t;
    } else {
        auto it = a.find(as_variable(cmp.rhs)->name);
        if (it == a.end()) return false;
        rhs_storage = it->second;
        rhs_term = &rhs_storage;
    }

    const Iri* li = as_iri(*lhs_term);
    const Iri* ri = as_iri(*rhs_term);
    if (li || ri) {
        if (!li || !ri) return false;
        if (cmp.op == CompareOp::Eq) return *li == *ri;
        if (cmp.op == CompareOp::Ne) return !(*li == *ri);
        return false;
    }
    bool comparable = false;
    int c = compare_literals(*as_literal(*lhs_term), *as_literal(*rhs_term), comparable);
    if (!comparable) return false;
    switch (cmp.op) {
        case CompareOp::Eq: return c == 0;
        case CompareOp::Ne: return c != 0;
        case CompareOp::Lt: return c < 0;
        case CompareOp::Gt: return c > 0;
        case CompareOp::Le: return c <= 0;
        case CompareOp::Ge: return c >= 0;
    }
    return false;
}

}  // namespace

std::set<std::pair<Iri, Iri>> naive_closure(const std::set<std::pair<Iri, Iri>>& edges) {
    std::set<std::pair<Iri, Iri>> pairs = edges;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<Iri, Iri>> additions;
        for (const auto& [a, b] : pairs) {
            for (const auto& [c, d] : pairs) {
                if (b == c && !pairs.count({a, d})) {
                    additions.emplace_back(a, d);
                }
            }
        }
        for (const auto& p : additions) {
            changed |= pairs.insert(p).second;
        }
    }
    return pairs;
}

ResultTable evaluate_naive(const QueryAst& ast, const KB& kb) {
    std::vector<Term> universe = term_universe(kb.graph);
    std::vector<std::string> vars = pattern_variables(ast.where);

    // Closure per path predicate appearing in the patterns.
    std::map<std::string, std::set<std::pair<Iri, Iri>>> closures;
    for (const TriplePattern& p : ast.where.patterns) {
        if (!p.path_plus) continue;
        const Iri& pred = *as_iri(*as_constant(p.predicate));
        if (closures.count(pred.value())) continue;
        std::set<std::pair<Iri, Iri>> edges;
        for (const Triple& t : kb.graph.triples()) {
            if (t.predicate == pred) {
                if (const Iri* o = as_iri(t.object)) edges.insert({t.subject, *o});
            }
        }
        closures[pred.value()] = naive_closure(edges);
    }

    // Exhaustive enumeration of assignments over the term universe.
    std::vector<Assignment> solutions;
    std::vector<std::size_t> choice(vars.size(), 0);
    if (!universe.empty() || vars.empty()) {
        bool carry = false;
        while (!carry) {
            Assignment a;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                a.emplace(vars[i], universe[choice[i]]);
            }
            bool ok = true;
            for (const TriplePattern& p : ast.where.patterns) {
                if (!pattern_holds(kb, p, a, closures)) {
                    ok = false;
                    break;
                }
            }
            if (ok) solutions.push_back(std::move(a));
            if (vars.empty()) break;
            std::size_t i = 0;
            while (i < vars.size()) {
                if (++choice[i] < universe.size()) break;
                choice[i] = 0;
                ++i;
            }
            carry = i == vars.size();
        }
    }

    // Subselect natural joins.
    for (const QueryAst& sub : ast.where.subselects) {
        ResultTable inner = evaluate_naive(sub, kb);
        std::vector<Assignment> joined;
        for (const Assignment& a : solutions) {
            for (const std::vector<Term>& row : inner.rows) {
                Assignment merged = a;
                bool ok = true;
                for (std::size_t i = 0; i < inner.header.size(); ++i) {
                    auto [it, inserted] = merged.emplace(inner.header[i], row[i]);
                    if (!inserted && !(it->second == row[i])) {
                        ok = false;
                        break;
                    }
                }
                if (ok) joined.push_back(std::move(merged));
            }
        }
        solutions = std::move(joined);
    }

    for (const Comparison& filter : ast.where.filters) {
        std::vector<Assignment> kept;
        for (const Assignment& a : solutions) {
            if (filter_holds(filter, a)) kept.push_back(a);
        }
        solutions = std::move(kept);
    }

    ResultTable table;
    for (const SelectItem& item : ast.select) table.header.push_back(item.variable.name);

    if (!ast.group_by.empty()) {
        std::map<std::vector<std::string>, std::vector<const Assignment*>> groups;
        for (const Assignment& a : solutions) {
            std::vector<std::string> key;
            bool complete = true;
            for (const Variable& g : ast.group_by) {
                auto it = a.find(g.name);
                if (it == a.end()) {
                    complete = false;
                    break;
                }
                key.push_back(term_key(it->second));
            }
            if (complete) groups[key].push_back(&a);
        }
        for (const auto& [key, members] : groups) {
            (void)key;
            std::vector<Term> row;
            Assignment row_binding;
            for (const SelectItem& item : ast.select) {
                if (item.is_count) {
                    std::int64_t n = 0;
                    for (const Assignment* m : members) {
                        if (m->count(item.count_argument.name)) ++n;
                    }
                    row.push_back(Term{Literal::integer(n)});
                    row_binding.emplace(item.variable.name, row.back());
                } else {
                    row.push_back(members.front()->at(item.variable.name));
                    row_binding.emplace(item.variable.name, row.back());
                }
            }
            if (ast.having && !filter_holds(*ast.having, row_binding)) continue;
            table.rows.push_back(std::move(row));
        }
    } else {
        for (const Assignment& a : solutions) {
            std::vector<Term> row;
            bool complete = true;
            for (const SelectItem& item : ast.select) {
                auto it = a.find(item.variable.name);
                if (it == a.end()) {
                    complete = false;
                    break;
                }
                row.push_back(it->second);
            }
            if (complete) table.rows.push_back(std::move(row));
        }
    }

    std::sort(table.rows.begin(), table.rows.end(),
              [](const std::vector<Term>& a, const std::vector<Term>& b) {
                  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
                      std::string ka = term_key(a[i]), kb2 = term_key(b[i]);
                      if (ka != kb2) return ka < kb2;
                  }
                  return a.size() < b.size();
              });
    if (ast.distinct) {
        table.rows.erase(std::unique(table.rows.begin(), table.rows.end()), table.rows.end());
    }
    return table;
}

}  // namespace annetto::testsupport
