#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <soficlab/errors.hpp>
#include <soficlab/presentation.hpp>

#include <doctest.h>

#include <fstream>

using namespace soficlab;

namespace {

bool follower_separated(const LabeledGraph& g, int len) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (oracle::followers(g, u, len) == oracle::followers(g, v, len)) return false;
    return true;
}

// Same language up to length len, by brute force.
bool same_words(const LabeledGraph& a, const LabeledGraph& b, int len) {
    for (int n = 1; n <= len; ++n)
        for (const Word& w : oracle::all_words(a.alphabet().size(), n))
            if (oracle::readable(a, w) != oracle::readable(b, w)) return false;
    return true;
}

} // namespace

TEST_CASE("Fischer covers are right-resolving, follower-separated and present the same language") {
    for (const char* name : {"even", "golden", "golden_even", "ex_5_4", "aab", "g2", "full2", "two_cycle00"}) {
        CAPTURE(name);
        const LabeledGraph g = fixtures::graph(name);
        const FischerCover f = fischer_cover_of(g);
        CHECK(f.graph.right_resolving());
        CHECK(is_irreducible(f.graph));
        CHECK(follower_separated(f.graph, 6));
        CHECK(same_words(f.graph, g, 7));
        // Idempotence.
        CHECK(isomorphic_right_resolving(fischer_cover_of(f.graph).graph, f.graph));
    }
}

TEST_CASE("frozen Fischer cover sizes") {
    CHECK(fischer_cover(fixtures::shift("even")).graph.vertex_count() == 2);
    CHECK(fischer_cover(fixtures::shift("golden_even")).graph.vertex_count() == 3);
    CHECK(fischer_cover(fixtures::shift("two_cycle00")).graph.vertex_count() == 1);
    CHECK(fischer_cover(fixtures::shift("g1")).graph.vertex_count() == 7);
}

TEST_CASE("left Fischer cover of the vertex-labelled example") {
    const ShiftHandle y = fixtures::shift("g1");
    const FischerCover left = left_fischer_cover(y);
    CHECK(left.graph.left_resolving());
    CHECK(isomorphic_left_resolving(left.graph, fixtures::graph("g2")));
    CHECK_FALSE(isomorphic_right_resolving(y.fischer().graph, fixtures::graph("even")));
}

TEST_CASE("reducible presentations") {
    Alphabet a({"0", "1"});
    LabeledGraph two(a, {"p", "q"}, {{0, 0, 0}, {1, 1, 1}});
    CHECK_THROWS_AS(ShiftHandle::from_graph(two).fischer(), NotIrreducibleError);
    // A reducible graph whose shift is still irreducible: a transient copy.
    LabeledGraph extra(a, {"p", "q", "r"}, {{0, 1, 0}, {1, 0, 1}, {2, 2, 0}, {2, 0, 1}, {1, 2, 1}});
    CHECK_NOTHROW(fischer_cover_of(fixtures::graph("even")));
}

TEST_CASE("magic and synchronizing words") {
    const ShiftHandle even = fixtures::shift("even");
    const FischerCover& f = even.fischer();
    CHECK(is_magic(f, fixtures::word(even, "1")).magic);
    CHECK_FALSE(is_magic(f, fixtures::word(even, "00")).magic);
    CHECK(is_magic(f, fixtures::word(even, "00")).in_language);
    CHECK_FALSE(is_magic(f, fixtures::word(even, "101")).in_language);
    CHECK(is_synchronizing(even, fixtures::word(even, "010")));
    CHECK_FALSE(is_synchronizing(even, fixtures::word(even, "0")));
    const auto [m, v] = shortest_magic_word(f);
    CHECK(m.size() == 1);
    CHECK(run_forward(f.graph, f.graph.all_vertices(), m) == VertexSet{v});
    for (int t = 0; t < f.graph.vertex_count(); ++t)
        CHECK(run_forward(f.graph, f.graph.all_vertices(), magic_word_to(f, t)) == VertexSet{t});
}

TEST_CASE("shifts_equal") {
    CHECK(shifts_equal(fixtures::shift("golden"), ShiftHandle::from_graph(fixtures::graph("golden"))));
    CHECK_FALSE(shifts_equal(fixtures::shift("golden"), fixtures::shift("even")));
    CHECK(shifts_equal(fixtures::shift("point0"), fixtures::shift("two_cycle00")));
    // Source and target readings of the same vertex-labelled graph.
    nlohmann::json doc = nlohmann::json::parse(std::ifstream(fixtures::path("g1")));
    doc["label_convention"] = "source";
    CHECK(shifts_equal(ShiftHandle::from_graph(presentation_from_json(doc)), fixtures::shift("g1")));
}

TEST_CASE("determinize and follower classes") {
    const LabeledGraph g = fixtures::graph("golden_even");
    const SubsetAutomaton dfa = determinize(g);
    CHECK(dfa.states[0] == g.all_vertices());
    for (int s = 0; s < dfa.state_count(); ++s)
        for (Symbol a = 0; a < g.alphabet().size(); ++a) {
            const int t = dfa.next(s, a);
            const VertexSet img = step_forward(g, dfa.states[s], a);
            if (t < 0) CHECK(img.empty());
            else CHECK(dfa.states[t] == img);
        }
    const std::vector<int> cls = follower_classes({{1, -1}, {1, -1}});
    CHECK(cls[0] == cls[1]);
}
