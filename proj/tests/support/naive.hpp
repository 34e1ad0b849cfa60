#pragma once

#include "annetto/query.hpp"

#include <set>
#include <utility>
#include <vector>

// Reference implementations used as test oracles. They favor obvious,
// definition-shaped code over speed and share nothing with the engine's
// evaluation path.

namespace annetto::testsupport {

// Transitive closure of an edge set by fixed-point expansion.
std::set<std::pair<Iri, Iri>> naive_closure(const std::set<std::pair<Iri, Iri>>& edges);

// Query evaluation by exhaustive enumeration of variable assignments over
// the graph's terms. Only feasible on small graphs.
ResultTable evaluate_naive(const QueryAst& ast, const KB& kb);

}  // namespace annetto::testsupport
