#pragma once

#include "annetto/kb.hpp"
#include "annetto/query.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Seeded random generators for graphs, triples and queries. All draws go
// through one engine so a failing case reproduces from its seed.

namespace annetto::testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int range(int lo, int hi) {  // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    bool chance(int percent) { return range(1, 100) <= percent; }

    template <typename T>
    const T& pick(const std::vector<T>& pool) {
        return pool[static_cast<std::size_t>(range(0, static_cast<int>(pool.size()) - 1))];
    }

private:
    std::mt19937_64 engine_;
};

// A random triple over small pools of IRIs and literals; distinct calls can
// repeat triples.
Triple random_triple(Rng& rng);

// Graph of up to max_triples random triples, including some rdf:type
// assertions over built-in ontology classes.
Graph random_graph(Rng& rng, int max_triples);

// A random query against the pools used by random_graph: 1..4 patterns,
// optional filter, path, DISTINCT, aggregation, and an occasional subselect.
QueryAst random_query(Rng& rng);

}  // namespace annetto::testsupport
