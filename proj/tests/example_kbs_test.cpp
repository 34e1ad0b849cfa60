#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annetto/builder.hpp"
#include "annetto/example_kbs.hpp"
#include "annetto/query.hpp"
#include "annetto/turtle.hpp"
#include "annetto/validator.hpp"
#include "annetto/vocab.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

using namespace annetto;
namespace v = vocab;

namespace {

Iri iri(const std::string& local) {
    return Iri(std::string(v::kInstanceNs) + local);
}

KB combined() {
    KB kb = make_kb();
    for (const KB& part : {examples::build_simple_classifier(), examples::build_gan(),
                           examples::build_aae()}) {
        for (const Triple& t : part.graph.triples()) {
            kb.graph.insert(t);
        }
    }
    return kb;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("simple classifier: three inferred hidden layers and a passing score") {
    KB kb = examples::build_simple_classifier();
    CHECK(validate(kb).valid());
    CHECK(instances_of(kb, v::kHiddenLayer).size() == 3);
    CHECK(examples::kSimpleClassifierScore > 0.7);
    CHECK(kb.graph.contains(Triple{iri("sc_evaluation"), v::kEvalScore,
                                   Term{Literal::real(examples::kSimpleClassifierScore)}}));
}

TEST_CASE("gan: three networks and a five-fold training loop") {
    KB kb = examples::build_gan();
    CHECK(validate(kb).valid());
    CHECK(instances_of(kb, v::kNetwork).size() == 3);
    CHECK(kb.graph.match(iri("GAN"), v::kHasNetwork, std::nullopt).size() == 3);
    CHECK(kb.graph.contains(
        Triple{iri("gan_trainloop"), v::kLoopCount, Term{Literal::integer(5)}}));
    // The session sees every step, including the ones nested in the loop.
    CHECK(kb.graph.match(iri("gan_session"), v::kHasTrainingStep, std::nullopt).size() == 5);
}

TEST_CASE("aae: seven networks and the nine-step schedule") {
    KB kb = examples::build_aae();
    CHECK(validate(kb).valid());
    CHECK(instances_of(kb, v::kNetwork).size() == 7);
    CHECK(kb.graph.match(iri("AAE"), v::kHasNetwork, std::nullopt).size() == 7);
    CHECK(kb.graph.match(iri("aae_session"), v::kHasTrainingStep, std::nullopt).size() == 9);
    // Alg-order chain from the autoencoder step to the label generator step.
    const char* order[] = {
        "aae_autoencoder_step", "aae_style_forward", "aae_label_forward",
        "aae_styledis_noise_step", "aae_labeldis_noise_step", "aae_styledis_encodings_step",
        "aae_labeldis_encodings_step", "aae_stylegen_step", "aae_labelgen_step",
    };
    for (int i = 0; i + 1 < 9; ++i) {
        CHECK(kb.graph.contains(
            Triple{iri(order[i]), v::kNextTrainingStep, Term{iri(order[i + 1])}}));
    }
}

TEST_CASE("top-level step chains are linear") {
    for (KB kb : {examples::build_gan(), examples::build_aae()}) {
        std::set<Iri> inner;
        for (const Triple& t : kb.graph.match(std::nullopt, v::kHasLoopStep, std::nullopt)) {
            inner.insert(*as_iri(t.object));
        }
        for (const Iri& session : instances_of(kb, v::kTrainingSession)) {
            for (const Triple& t : kb.graph.match(session, v::kHasTrainingStep, std::nullopt)) {
                const Iri& step = *as_iri(t.object);
                if (inner.count(step)) continue;
                CHECK(kb.graph.match(step, v::kNextTrainingStep, std::nullopt).size() <= 1);
                CHECK(kb.graph.match(std::nullopt, v::kNextTrainingStep, Term{step}).size() <= 1);
            }
        }
    }
}

TEST_CASE("golden: query 2 retrieves exactly the AAE configuration") {
    KB kb = combined();
    ResultTable t = evaluate(parse_query(examples::query_text("q2")), kb);
    REQUIRE(t.rows.size() == 1);
    CHECK(*as_iri(t.rows[0][0]) == iri("AAE"));
}

TEST_CASE("golden: query 3 returns exactly the AAE_AE network") {
    KB kb = combined();
    ResultTable t = evaluate(parse_query(examples::query_text("q3")), kb);
    REQUIRE(t.rows.size() == 1);
    CHECK(*as_iri(t.rows[0][0]) == iri("AAE_AE"));
}

TEST_CASE("golden: query 4 returns (AAE, 0.68)") {
    KB kb = combined();
    ResultTable t = evaluate(parse_query(examples::query_text("q4")), kb);
    REQUIRE(t.rows.size() == 1);
    CHECK(*as_iri(t.rows[0][0]) == iri("AAE"));
    const Literal* score = as_literal(t.rows[0][1]);
    REQUIRE(score != nullptr);
    CHECK(score->type() == LiteralType::Double);
    CHECK(score->double_value() == 0.68);
}

TEST_CASE("golden: verbatim query 1 is empty, the prose variant finds the classifier") {
    KB kb = combined();
    CHECK(evaluate(parse_query(examples::query_text("q1")), kb).rows.empty());
    ResultTable t = evaluate(parse_query(examples::query_text("q1_prose")), kb);
    REQUIRE(t.rows.size() == 1);
    CHECK(*as_iri(t.rows[0][0]) == iri("simple_classification"));
    CHECK(as_literal(t.rows[0][1])->double_value() > 0.7);
}

TEST_CASE("golden queries also hold on the AAE KB alone") {
    KB kb = examples::build_aae();
    CHECK(evaluate(parse_query(examples::query_text("q2")), kb).rows.size() == 1);
    CHECK(evaluate(parse_query(examples::query_text("q3")), kb).rows.size() == 1);
    CHECK(evaluate(parse_query(examples::query_text("q4")), kb).rows.size() == 1);
}

TEST_CASE("export produces reparsable, byte-stable files") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "annetto_export_test";
    std::filesystem::remove_all(dir);
    examples::export_examples(dir);

    for (const char* name : {"simple.ttl", "gan.ttl", "aae.ttl"}) {
        CAPTURE(name);
        CHECK(std::filesystem::exists(dir / name));
    }
    Graph simple = parse_turtle(slurp(dir / "simple.ttl"));
    CHECK(graph_equal(simple, examples::build_simple_classifier().graph));
    Graph gan = parse_turtle(slurp(dir / "gan.ttl"));
    CHECK(graph_equal(gan, examples::build_gan().graph));
    Graph aae = parse_turtle(slurp(dir / "aae.ttl"));
    CHECK(graph_equal(aae, examples::build_aae().graph));

    // Parsed files validate cleanly too.
    for (const char* name : {"simple.ttl", "gan.ttl", "aae.ttl"}) {
        KB kb = make_kb();
        kb.graph = parse_turtle(slurp(dir / name));
        CHECK(validate(kb).valid());
    }

    // Re-export is byte-identical.
    std::map<std::string, std::string> first;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        first[entry.path().filename().string()] = slurp(entry.path());
    }
    CHECK(first.size() == 8);
    examples::export_examples(dir);
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        CHECK(first.at(entry.path().filename().string()) == slurp(entry.path()));
    }
    std::filesystem::remove_all(dir);
}
