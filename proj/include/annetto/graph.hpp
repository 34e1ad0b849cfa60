#pragma once

#include "annetto/term.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace annetto {

// Ordered prefix table. The empty prefix ("") is the default namespace,
// written ":" in Turtle and queries.
class PrefixMap {
public:
    PrefixMap() = default;

    // ":" bound to the ANNETT-O namespace, plus "xsd:".
    static PrefixMap defaults();
    static PrefixMap defaults(std::string_view default_ns);

    void set(std::string prefix, std::string ns);
    std::optional<std::string> ns_of(std::string_view prefix) const;

    // "p:local" or ":local" -> expanded IRI text; nullopt if the prefix is unknown.
    std::optional<std::string> expand(std::string_view pname) const;

    // Expanded IRI -> "p:local" when a namespace matches and the remainder
    // is a plain local name; nullopt otherwise.
    std::optional<std::string> shrink(std::string_view iri) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

// Local names usable after a prefix: [A-Za-z_][A-Za-z0-9_-]*
bool valid_local_name(std::string_view s);

// In-memory triple set with subject/predicate/object indexes. Iteration and
// match results follow insertion order, so output is deterministic for a
// fixed construction history. Reads never mutate internal state, so a graph
// that is no longer written to can be shared across threads.
class Graph {
public:
    Graph() : prefixes_(PrefixMap::defaults()) {}
    explicit Graph(PrefixMap prefixes) : prefixes_(std::move(prefixes)) {}

    // Returns true when the triple was absent; duplicates are no-ops.
    bool insert(Triple t);
    // Returns true when the triple was present; absent triples are no-ops.
    bool remove(const Triple& t);
    bool contains(const Triple& t) const;

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }
    const std::vector<Triple>& triples() const { return triples_; }

    // Bound positions must agree exactly; unbound positions are wildcards.
    std::vector<Triple> match(const std::optional<Iri>& subject,
                              const std::optional<Iri>& predicate,
                              const std::optional<Term>& object) const;

    PrefixMap& prefixes() { return prefixes_; }
    const PrefixMap& prefixes() const { return prefixes_; }

private:
    void rebuild_indexes();
    std::vector<Triple> collect(const std::vector<std::size_t>& candidates,
                                const std::optional<Iri>& subject,
                                const std::optional<Iri>& predicate,
                                const std::optional<Term>& object) const;

    std::vector<Triple> triples_;
    std::unordered_map<Triple, std::size_t, TripleHash> positions_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_subject_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_predicate_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_object_;
    PrefixMap prefixes_;
};

// Plain set equality over the triples; prefix tables are ignored.
bool graph_equal(const Graph& a, const Graph& b);

}  // namespace annetto
