#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annetto/kb.hpp"
#include "annetto/schema.hpp"
#include "annetto/turtle.hpp"
#include "annetto/vocab.hpp"
#include "support/gen.hpp"

#include <map>
#include <set>

using namespace annetto;
namespace v = vocab;

TEST_CASE("builtin roster is exactly the documented class set") {
    SchemaModel m = SchemaModel::builtin();
    const std::set<Iri> expected = {
        v::kANNConfiguration, v::kNetwork, v::kLayer, v::kHiddenLayer, v::kInOutLayer,
        v::kActivationLayer, v::kAggregationLayer, v::kSeparationLayer, v::kModificationLayer,
        v::kFullyConnectedLayer, v::kConcatLayer, v::kInputLayer, v::kOutputLayer,
        v::kTrainingStrategy, v::kTrainingSession, v::kTrainingStep, v::kTrainingLoop,
        v::kTrainingSingle, v::kTrainingSingleForwardOnly, v::kTrainingOptimizer,
        v::kNetworkEvaluation, v::kFunction, v::kActivationFunction, v::kRelu, v::kSoftmax,
        v::kObjectiveFunction, v::kCostFunction, v::kMetric, v::kAccuracy, v::kDataset,
        v::kLabelset, v::kDatasetPipe, v::kTrainedModel, v::kTaskCharacterization, v::kClustering,
        v::kClassification, v::kGeneration, v::kDiscrimination, v::kAdversarial,
        v::kDataCharacterization,
    };
    std::set<Iri> actual;
    for (const auto& [iri, def] : m.classes()) {
        (void)def;
        actual.insert(iri);
    }
    CHECK(actual == expected);
    CHECK(actual.size() == 40);
}

TEST_CASE("documented parentage holds") {
    SchemaModel m = SchemaModel::builtin();
    CHECK(m.is_subclass(v::kFullyConnectedLayer, v::kHiddenLayer));
    CHECK(m.is_subclass(v::kFullyConnectedLayer, v::kActivationLayer));
    CHECK(m.is_subclass(v::kConcatLayer, v::kAggregationLayer));
    CHECK(m.is_subclass(v::kInputLayer, v::kInOutLayer));
    CHECK(m.is_subclass(v::kTrainingLoop, v::kTrainingStep));
    CHECK(m.is_subclass(v::kLabelset, v::kDataset));
    CHECK(m.is_subclass(v::kRelu, v::kActivationFunction));
    CHECK(m.is_subclass(v::kRelu, v::kFunction));
    CHECK(m.is_subclass(v::kCostFunction, v::kObjectiveFunction));
    CHECK(m.is_subclass(v::kAccuracy, v::kMetric));
    CHECK(m.is_subclass(v::kAdversarial, v::kTaskCharacterization));
    CHECK(m.is_subclass(v::kLayer, v::kLayer));  // reflexive
    CHECK_FALSE(m.is_subclass(v::kNetwork, v::kLayer));
    CHECK_FALSE(m.is_subclass(v::kHiddenLayer, v::kFullyConnectedLayer));
}

TEST_CASE("is_subclass rejects unknown classes by name") {
    SchemaModel m = SchemaModel::builtin();
    Iri unknown(std::string(v::kInstanceNs) + "NoSuchClass");
    CHECK_THROWS_WITH(m.is_subclass(unknown, v::kLayer), doctest::Contains("NoSuchClass"));
    CHECK_THROWS_AS(m.is_subclass(v::kLayer, unknown), Error);
}

TEST_CASE("subclass closure is a partial order on the roster") {
    SchemaModel m = SchemaModel::builtin();
    std::vector<Iri> roster;
    for (const auto& [iri, def] : m.classes()) {
        (void)def;
        roster.push_back(iri);
    }
    for (const Iri& a : roster) {
        CHECK(m.is_subclass(a, a));
        for (const Iri& b : roster) {
            if (m.is_subclass(a, b) && m.is_subclass(b, a)) {
                CHECK(a == b);  // antisymmetry
            }
            for (const Iri& c : roster) {
                if (m.is_subclass(a, b) && m.is_subclass(b, c)) {
                    CHECK(m.is_subclass(a, c));  // transitivity
                }
            }
        }
    }
}

TEST_CASE("inverse pairing is involutive and symmetric properties have no inverse") {
    SchemaModel m = SchemaModel::builtin();
    for (const auto& [iri, def] : m.properties()) {
        if (def.inverse_of) {
            const PropertyDef* other = m.property(*def.inverse_of);
            REQUIRE(other != nullptr);
            REQUIRE(other->inverse_of.has_value());
            CHECK(*other->inverse_of == iri);
        }
        if (def.symmetric) {
            CHECK_FALSE(def.inverse_of.has_value());
        }
    }
    CHECK(m.property(v::kNextLayer)->inverse_of == v::kPreviousLayer);
    CHECK(m.property(v::kSameLayerAs)->symmetric);
}

TEST_CASE("builtin_schema is deterministic across calls") {
    SchemaModel a = SchemaModel::builtin();
    SchemaModel b = SchemaModel::builtin();
    REQUIRE(a.classes().size() == b.classes().size());
    auto ia = a.classes().begin();
    auto ib = b.classes().begin();
    for (; ia != a.classes().end(); ++ia, ++ib) {
        CHECK(ia->first == ib->first);
        CHECK(ia->second.parents == ib->second.parents);
    }
}

TEST_CASE("extend with empty graph changes nothing") {
    SchemaModel m = SchemaModel::builtin();
    SchemaModel e = m.extended_with(Graph{});
    CHECK(e.classes().size() == m.classes().size());
    CHECK(e.properties().size() == m.properties().size());
}

TEST_CASE("extend with a new leaf under Layer") {
    SchemaModel m = SchemaModel::builtin();
    Graph g = parse_turtle(
        "@prefix : <http://w3id.org/annett-o/> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        ":ConvolutionLayer rdfs:subClassOf :ActivationLayer .\n");
    SchemaModel e = m.extended_with(g);
    Iri conv(std::string(v::kInstanceNs) + "ConvolutionLayer");
    CHECK(e.is_subclass(conv, v::kLayer));
    CHECK(e.is_subclass(conv, v::kHiddenLayer));
    CHECK_FALSE(m.has_class(conv));  // original untouched
}

TEST_CASE("extension never weakens built-in definitions") {
    SchemaModel m = SchemaModel::builtin();
    Graph g = parse_turtle(
        "@prefix : <http://w3id.org/annett-o/> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        ":FullyConnectedLayer rdfs:subClassOf :SomethingElse .\n");
    SchemaModel e = m.extended_with(g);
    CHECK(e.is_subclass(v::kFullyConnectedLayer, v::kActivationLayer));
    CHECK(e.is_subclass(v::kFullyConnectedLayer,
                        Iri(std::string(v::kInstanceNs) + "SomethingElse")));
}

TEST_CASE("cyclic subclass declarations are rejected naming the cycle") {
    SchemaModel m = SchemaModel::builtin();
    Graph g = parse_turtle(
        "@prefix : <http://w3id.org/annett-o/> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        ":A rdfs:subClassOf :B .\n"
        ":B rdfs:subClassOf :A .\n");
    CHECK_THROWS_WITH(m.extended_with(g), doctest::Contains("cycle"));
}

TEST_CASE("closure equals naive fixed-point iteration on random DAGs") {
    testsupport::Rng rng(99);
    for (int round = 0; round < 40; ++round) {
        // Parents only point to lower indexes, so the graph is acyclic.
        int n = rng.range(2, 10);
        std::map<int, std::set<int>> parents;
        std::string ttl = "@prefix : <http://w3id.org/annett-o/> .\n"
                          "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
                          "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n";
        for (int i = 0; i < n; ++i) {
            ttl += ":C" + std::to_string(i) + " a owl:Class .\n";
            for (int j = 0; j < i; ++j) {
                if (rng.chance(30)) {
                    parents[i].insert(j);
                    ttl += ":C" + std::to_string(i) + " rdfs:subClassOf :C" + std::to_string(j) +
                           " .\n";
                }
            }
        }
        SchemaModel e = SchemaModel::builtin().extended_with(parse_turtle(ttl));

        // Naive fixed point: ancestors[i] = {i} u parents u ancestors of parents.
        std::map<int, std::set<int>> closure;
        for (int i = 0; i < n; ++i) closure[i] = {i};
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i) {
                for (int p : parents[i]) {
                    for (int anc : closure[p]) {
                        changed |= closure[i].insert(anc).second;
                    }
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Iri ci(std::string(v::kInstanceNs) + "C" + std::to_string(i));
                Iri cj(std::string(v::kInstanceNs) + "C" + std::to_string(j));
                CHECK(e.is_subclass(ci, cj) == (closure[i].count(j) > 0));
            }
        }
    }
}

TEST_CASE("types_with_inference includes superclasses of asserted types") {
    KB kb = make_kb();
    Iri layer(std::string(v::kInstanceNs) + "h1");
    kb.graph.insert(Triple{layer, v::kRdfType, Term{v::kFullyConnectedLayer}});
    std::set<Iri> types = types_with_inference(kb, layer);
    CHECK(types.count(v::kFullyConnectedLayer));
    CHECK(types.count(v::kActivationLayer));
    CHECK(types.count(v::kHiddenLayer));
    CHECK(types.count(v::kLayer));
    CHECK_FALSE(types.count(v::kInOutLayer));
}

TEST_CASE("types_with_inference of an untyped individual is empty") {
    KB kb = make_kb();
    Iri thing(std::string(v::kInstanceNs) + "untyped");
    kb.graph.insert(Triple{thing, v::kHasNetwork, Term{thing}});
    CHECK(types_with_inference(kb, thing).empty());
}

TEST_CASE("types_with_inference equals the union of parent closures on random data") {
    testsupport::Rng rng(123);
    for (int round = 0; round < 30; ++round) {
        KB kb = make_kb();
        kb.graph = testsupport::random_graph(rng, 40);
        std::set<Iri> subjects;
        for (const Triple& t : kb.graph.triples()) subjects.insert(t.subject);
        for (const Iri& s : subjects) {
            std::set<Iri> expected;
            for (const Triple& t : kb.graph.match(s, v::kRdfType, std::nullopt)) {
                const Iri* cls = as_iri(t.object);
                if (!cls) continue;
                if (kb.schema.has_class(*cls)) {
                    const auto& clo = kb.schema.superclosure(*cls);
                    expected.insert(clo.begin(), clo.end());
                } else {
                    expected.insert(*cls);
                }
            }
            CHECK(types_with_inference(kb, s) == expected);
        }
    }
}
