#pragma once

#include "annetto/graph.hpp"
#include "annetto/schema.hpp"

#include <set>
#include <vector>

namespace annetto {

// A graph paired with the vocabulary it is interpreted under; the unit of
// validation and querying.
struct KB {
    Graph graph;
    SchemaModel schema;
};

inline KB make_kb() {
    return KB{Graph{}, SchemaModel::builtin()};
}

// Asserted types of the individual plus all their superclasses. Types not
// known to the schema contribute just themselves.
std::set<Iri> types_with_inference(const KB& kb, const Iri& individual);

bool has_type(const KB& kb, const Iri& individual, const Iri& cls);

// Distinct individuals whose inferred types include cls, sorted by IRI.
std::vector<Iri> instances_of(const KB& kb, const Iri& cls);

}  // namespace annetto
