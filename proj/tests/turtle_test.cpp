#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annetto/turtle.hpp"
#include "annetto/vocab.hpp"
#include "support/gen.hpp"

using namespace annetto;
namespace v = vocab;

namespace {

Iri iri(const std::string& local) {
    return Iri(std::string(v::kInstanceNs) + local);
}

}  // namespace

TEST_CASE("single triple") {
    Graph g = parse_turtle(":A :p :B .");
    CHECK(g.size() == 1);
    CHECK(g.contains(Triple{iri("A"), iri("p"), Term{iri("B")}}));
}

TEST_CASE("typed double literal") {
    Graph g = parse_turtle(":e :eval_score \"0.68\"^^xsd:double .");
    CHECK(g.contains(Triple{iri("e"), iri("eval_score"), Term{Literal::real(0.68)}}));
}

TEST_CASE("predicate and object lists, a keyword, comments") {
    Graph g = parse_turtle(
        "# a configuration\n"
        ":GAN a :ANNConfiguration ;\n"
        "    :hasNetwork :G, :D ;\n"
        "    :note \"multi\\nline\" .\n");
    CHECK(g.size() == 4);
    CHECK(g.contains(Triple{iri("GAN"), v::kRdfType, Term{iri("ANNConfiguration")}}));
    CHECK(g.contains(Triple{iri("GAN"), iri("hasNetwork"), Term{iri("G")}}));
    CHECK(g.contains(Triple{iri("GAN"), iri("hasNetwork"), Term{iri("D")}}));
    CHECK(g.contains(Triple{iri("GAN"), iri("note"), Term{Literal::str("multi\nline")}}));
}

TEST_CASE("bare numbers: integer vs double") {
    Graph g = parse_turtle(":l :loop_count 5 . :m :rate 0.5 . :n :big 1e3 .");
    CHECK(g.contains(Triple{iri("l"), iri("loop_count"), Term{Literal::integer(5)}}));
    CHECK(g.contains(Triple{iri("m"), iri("rate"), Term{Literal::real(0.5)}}));
    CHECK(g.contains(Triple{iri("n"), iri("big"), Term{Literal::real(1000.0)}}));
}

TEST_CASE("prefix declarations override the base map") {
    Graph g = parse_turtle(
        "@prefix : <http://example.org/ns#> .\n"
        "@prefix ex: <http://example.org/other#> .\n"
        ":A ex:p :B .\n");
    CHECK(g.contains(Triple{Iri("http://example.org/ns#A"), Iri("http://example.org/other#p"),
                            Term{Iri("http://example.org/ns#B")}}));
}

TEST_CASE("full IRIs in angle brackets") {
    Graph g = parse_turtle("<http://x.org/a> <http://x.org/p> <http://x.org/b> .");
    CHECK(g.size() == 1);
}

TEST_CASE("unterminated string reports its position") {
    try {
        parse_turtle(":A :p \"oops .\n:B :q :C .");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 7);
        CHECK(std::string(e.what()).find("unterminated string") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry 1-based line and column") {
    try {
        parse_turtle(":A :p :B .\n:C %bad .");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 4);
    }
}

TEST_CASE("unsupported constructs are named") {
    CHECK_THROWS_AS(parse_turtle(":A :p _:blank ."), UnsupportedError);
    CHECK_THROWS_AS(parse_turtle(":A :p [ :q :B ] ."), UnsupportedError);
    CHECK_THROWS_AS(parse_turtle(":A :p (1 2) ."), UnsupportedError);
    CHECK_THROWS_AS(parse_turtle(":A :p \"\"\"multi\"\"\" ."), UnsupportedError);
    CHECK_THROWS_AS(parse_turtle("@base <http://x.org/> ."), UnsupportedError);
    try {
        parse_turtle(":A :p _:blank .");
    } catch (const UnsupportedError& e) {
        CHECK(e.feature() == "blank node");
    }
}

TEST_CASE("unknown datatype is rejected") {
    CHECK_THROWS_WITH(parse_turtle(":A :p \"x\"^^xsd:decimal ."),
                      doctest::Contains("unsupported datatype"));
}

TEST_CASE("empty graph serializes to only prefix lines") {
    Graph g;
    std::string text = serialize_turtle(g);
    CHECK(text ==
          "@prefix : <http://w3id.org/annett-o/> .\n"
          "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n");
}

TEST_CASE("serialization is deterministic and sorted") {
    Graph g;
    g.insert(Triple{iri("B"), iri("p"), Term{iri("X")}});
    g.insert(Triple{iri("A"), iri("q"), Term{iri("Y")}});
    g.insert(Triple{iri("A"), v::kRdfType, Term{iri("Network")}});
    g.insert(Triple{iri("A"), iri("q"), Term{iri("B")}});
    std::string once = serialize_turtle(g);
    std::string twice = serialize_turtle(g);
    CHECK(once == twice);
    // :A sorts before :B, "a" precedes :q, :B precedes :Y.
    CHECK(once.find(":A a :Network") != std::string::npos);
    CHECK(once.find(":A") < once.find(":B :p"));
    CHECK(once.find(":q :B, :Y") != std::string::npos);
}

TEST_CASE("doubles serialize with the shortest round-tripping form") {
    Graph g;
    g.insert(Triple{iri("e"), iri("s"), Term{Literal::real(0.68)}});
    g.insert(Triple{iri("e"), iri("t"), Term{Literal::real(-120.0)}});
    std::string text = serialize_turtle(g);
    CHECK(text.find("\"0.68\"^^xsd:double") != std::string::npos);
    CHECK(text.find("\"-120\"^^xsd:double") != std::string::npos);
}

TEST_CASE("round trip: parse(serialize(g)) == g for 200 random graphs") {
    testsupport::Rng rng(31337);
    for (int round = 0; round < 200; ++round) {
        Graph g = testsupport::random_graph(rng, 50);
        std::string text = serialize_turtle(g);
        Graph back = parse_turtle(text);
        CHECK(graph_equal(back, g));
        CHECK(serialize_turtle(back) == text);
    }
}

TEST_CASE("round trip covers strings with escapes and non-prefixed IRIs") {
    Graph g;
    g.insert(Triple{Iri("http://elsewhere.org/x"), iri("p"),
                    Term{Literal::str("quote \" backslash \\ tab \t end")}});
    g.insert(Triple{iri("s"), iri("q"), Term{Literal::str("control \x01 char")}});
    g.insert(Triple{iri("s"), iri("r"), Term{Literal::date_time("2018-03-26T09:00:00")}});
    Graph back = parse_turtle(serialize_turtle(g));
    CHECK(graph_equal(back, g));
}
