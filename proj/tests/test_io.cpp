#include "support/fixtures.hpp"

#include <soficlab/errors.hpp>
#include <soficlab/io.hpp>

#include <doctest.h>

using namespace soficlab;

TEST_CASE("serialisation round trip") {
    for (const char* name : {"even", "g1", "g2", "ex_5_4", "golden_edge"}) {
        const LabeledGraph g = fixtures::graph(name);
        CHECK(parse_presentation(serialize_presentation(g)) == g);
    }
}

TEST_CASE("vertex-labelled conversion honours the label convention") {
    const LabeledGraph g1 = fixtures::graph("g1");
    // a1 -> a2 carries the label of a2 under the target convention.
    CHECK(g1.alphabet().name(g1.edge(0).label) == "w");
    const LabeledGraph g2 = fixtures::graph("g2");
    CHECK(g2.alphabet().name(g2.edge(0).label) == "u");
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_presentation("{"), SchemaError);
    CHECK_THROWS_AS(parse_presentation(R"({"type":"x","alphabet":["a"],"vertices":[],"edges":[]})"), SchemaError);
    CHECK_THROWS_AS(parse_presentation(R"({"type":"edge-labeled","alphabet":["a"],"vertices":["p"],"edges":[{"src":"p","dst":"q","label":"a"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_presentation(R"({"type":"edge-labeled","alphabet":["^a"],"vertices":["p"],"edges":[]})"), ValidationError);
    CHECK_THROWS_AS(parse_presentation(R"({"type":"edge-labeled","alphabet":["a"],"vertices":["p","p"],"edges":[]})"), ValidationError);
}

TEST_CASE("words over compact and long alphabets") {
    const Alphabet compact({"0", "1"});
    CHECK(parse_word(compact, "0110") == Word{0, 1, 1, 0});
    CHECK(format_word(compact, {1, 0}) == "10");
    const Alphabet longer({"00", "01", "10"});
    CHECK(parse_word(longer, "01 10") == Word{1, 2});
    CHECK(parse_word(longer, "01,10") == Word{1, 2});
    CHECK_THROWS_AS(parse_word(compact, "2"), ValidationError);
}

TEST_CASE("dot output names every edge") {
    const std::string dot = to_dot(fixtures::graph("even"));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
}
