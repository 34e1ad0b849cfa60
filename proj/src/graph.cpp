#include "annetto/graph.hpp"

#include "annetto/vocab.hpp"

#include <algorithm>
#include <cctype>

namespace annetto {

PrefixMap PrefixMap::defaults() {
    return defaults(vocab::kInstanceNs);
}

PrefixMap PrefixMap::defaults(std::string_view default_ns) {
    PrefixMap m;
    m.set("", std::string(default_ns));
    m.set("xsd", std::string(vocab::kXsdNs));
    return m;
}

void PrefixMap::set(std::string prefix, std::string ns) {
    for (auto& [p, n] : entries_) {
        if (p == prefix) {
            n = std::move(ns);
            return;
        }
    }
    entries_.emplace_back(std::move(prefix), std::move(ns));
}

std::optional<std::string> PrefixMap::ns_of(std::string_view prefix) const {
    for (const auto& [p, n] : entries_) {
        if (p == prefix) return n;
    }
    return std::nullopt;
}

std::optional<std::string> PrefixMap::expand(std::string_view pname) const {
    std::size_t colon = pname.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    auto ns = ns_of(pname.substr(0, colon));
    if (!ns) return std::nullopt;
    return *ns + std::string(pname.substr(colon + 1));
}

std::optional<std::string> PrefixMap::shrink(std::string_view iri) const {
    for (const auto& [p, n] : entries_) {
        if (iri.size() > n.size() && iri.substr(0, n.size()) == n) {
            std::string_view local = iri.substr(n.size());
            if (valid_local_name(local)) {
                return p + ":" + std::string(local);
            }
        }
    }
    return std::nullopt;
}

bool valid_local_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    }
    return true;
}

bool Graph::insert(Triple t) {
    if (positions_.count(t)) return false;
    std::size_t pos = triples_.size();
    by_subject_[t.subject.value()].push_back(pos);
    by_predicate_[t.predicate.value()].push_back(pos);
    by_object_[term_key(t.object)].push_back(pos);
    positions_.emplace(t, pos);
    triples_.push_back(std::move(t));
    return true;
}

bool Graph::remove(const Triple& t) {
    auto it = positions_.find(t);
    if (it == positions_.end()) return false;
    std::size_t pos = it->second;
    triples_.erase(triples_.begin() + static_cast<std::ptrdiff_t>(pos));
    positions_.erase(it);
    for (auto& [triple, p] : positions_) {
        if (p > pos) --p;
    }
    rebuild_indexes();
    return true;
}

bool Graph::contains(const Triple& t) const {
    return positions_.count(t) != 0;
}

void Graph::rebuild_indexes() {
    by_subject_.clear();
    by_predicate_.clear();
    by_object_.clear();
    for (std::size_t i = 0; i < triples_.size(); ++i) {
        by_subject_[triples_[i].subject.value()].push_back(i);
        by_predicate_[triples_[i].predicate.value()].push_back(i);
        by_object_[term_key(triples_[i].object)].push_back(i);
    }
}

std::vector<Triple> Graph::collect(const std::vector<std::size_t>& candidates,
                                   const std::optional<Iri>& subject,
                                   const std::optional<Iri>& predicate,
                                   const std::optional<Term>& object) const {
    std::vector<Triple> out;
    for (std::size_t i : candidates) {
        const Triple& t = triples_[i];
        if (subject && t.subject != *subject) continue;
        if (predicate && t.predicate != *predicate) continue;
        if (object && !(t.object == *object)) continue;
        out.push_back(t);
    }
    return out;
}

std::vector<Triple> Graph::match(const std::optional<Iri>& subject,
                                 const std::optional<Iri>& predicate,
                                 const std::optional<Term>& object) const {
    if (subject && predicate && object) {
        Triple probe{*subject, *predicate, *object};
        if (contains(probe)) return {probe};
        return {};
    }
    if (!subject && !predicate && !object) {
        return triples_;
    }

    const std::vector<std::size_t>* candidates = nullptr;
    static const std::vector<std::size_t> kEmpty;
    if (subject) {
        auto it = by_subject_.find(subject->value());
        candidates = it == by_subject_.end() ? &kEmpty : &it->second;
    } else if (object) {
        auto it = by_object_.find(term_key(*object));
        candidates = it == by_object_.end() ? &kEmpty : &it->second;
    } else {
        auto it = by_predicate_.find(predicate->value());
        candidates = it == by_predicate_.end() ? &kEmpty : &it->second;
    }
    return collect(*candidates, subject, predicate, object);
}

bool graph_equal(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;
    for (const Triple& t : a.triples()) {
        if (!b.contains(t)) return false;
    }
    return true;
}

}  // namespace annetto
