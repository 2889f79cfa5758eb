#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <soficlab/errors.hpp>
#include <soficlab/graph.hpp>
#include <soficlab/words.hpp>

#include <doctest.h>

using namespace soficlab;

TEST_CASE("step and run follow labelled edges") {
    const LabeledGraph g = fixtures::graph("even");
    const Symbol zero = *g.alphabet().find("0"), one = *g.alphabet().find("1");
    CHECK(step_forward(g, g.all_vertices(), one) == VertexSet{0});
    CHECK(step_forward(g, g.all_vertices(), zero) == VertexSet{0, 1});
    CHECK(step_backward(g, VertexSet{1}, zero) == VertexSet{0});
    CHECK(run_forward(g, VertexSet{1}, Word{one}).empty());
    CHECK(run_forward(g, VertexSet{0}, Word{zero, zero, one}) == VertexSet{0});
}

TEST_CASE("resolving properties") {
    CHECK(fixtures::graph("even").right_resolving());
    CHECK_FALSE(fixtures::graph("golden_even").right_resolving());
    CHECK(fixtures::graph("g1").right_resolving());
    CHECK(fixtures::graph("g2").left_resolving());
    CHECK(fixtures::graph("golden_edge").labels_distinct());
    CHECK_FALSE(fixtures::graph("golden").labels_distinct());
}

TEST_CASE("trim removes stranded vertices and reports origins") {
    Alphabet a({"0", "1"});
    // 0 <-> 1 cycle, 2 is a source, 3 a sink.
    LabeledGraph g(a, {"a", "b", "src", "sink"}, {{0, 1, 0}, {1, 0, 1}, {2, 0, 0}, {1, 3, 1}});
    CHECK_FALSE(is_essential(g));
    const TrimResult t = trim_with_map(g);
    CHECK(t.graph.vertex_count() == 2);
    CHECK(t.graph.edge_count() == 2);
    CHECK(t.vertex_origin == std::vector<int>{0, 1});
    CHECK(is_essential(t.graph));
    LabeledGraph dag(a, {"x", "y"}, {{0, 1, 0}});
    CHECK_THROWS_AS(trim(dag), EmptyShiftError);
}

TEST_CASE("components and periods agree with the closed-walk oracle") {
    for (const char* name : {"even", "ex_5_4", "aab", "g1", "g2", "golden_even", "orbit01", "cycle3_edge"}) {
        const LabeledGraph g = fixtures::graph(name);
        CAPTURE(name);
        CHECK(is_irreducible(g));
        CHECK(graph_period(g) == oracle::cycle_gcd(g));
    }
    Alphabet a({"0"});
    LabeledGraph two(a, {"p", "q"}, {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    const auto comps = scc_decompose(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<int>{0});
    CHECK_FALSE(is_irreducible(two));
    CHECK_THROWS_AS(cyclic_layering(two), NotIrreducibleError);
}

TEST_CASE("cyclic layering advances by one along every edge") {
    const LabeledGraph g = fixtures::graph("ex_5_4");
    const Layering l = cyclic_layering(g);
    CHECK(l.period == 2);
    for (const Edge& e : g.edges()) CHECK((l.residue[e.src] + 1) % l.period == l.residue[e.dst]);
}

TEST_CASE("higher block recoding keeps the centre label and the cycle structure") {
    const LabeledGraph g = fixtures::graph("even");
    const HigherBlock h = higher_block(g, 1);
    CHECK(h.m == 1);
    for (int e = 0; e < h.graph.edge_count(); ++e) CHECK(h.graph.edge(e).label == g.edge(h.centre_edge(e)).label);
    // Paths of length 3 in the even graph; each becomes an edge.
    CHECK(h.graph.edge_count() == 8);
    const std::vector<int> cyc = h.encode_cycle({1, 2});
    CHECK(cyc.size() == 2);
    CHECK(graph_period(h.graph) == graph_period(g));
}

TEST_CASE("reverse, relabel and over_alphabet") {
    const LabeledGraph g = fixtures::graph("golden_even");
    const LabeledGraph r = reverse(g);
    CHECK(r.edge_count() == g.edge_count());
    CHECK(r.edge(0).src == g.edge(0).dst);
    Alphabet one({"x"});
    const LabeledGraph flat = relabel(g, one, {0, 0});
    for (const Edge& e : flat.edges()) CHECK(e.label == 0);
    CHECK_THROWS_AS(over_alphabet(g, Alphabet({"0"})), ValidationError);
    CHECK(used_alphabet(fixtures::graph("point0")).size() == 1);
}

TEST_CASE("restriction keeps selected edges") {
    const LabeledGraph g = fixtures::graph("even");
    const LabeledGraph only_loop = restrict_to_subgraph(g, [](int) { return true; }, [&](int e) { return g.edge(e).src == g.edge(e).dst; });
    CHECK(only_loop.vertex_count() == 1);
    CHECK(only_loop.edge_count() == 1);
}
