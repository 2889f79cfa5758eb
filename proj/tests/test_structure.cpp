#include "support/fixtures.hpp"

#include <soficlab/census.hpp>
#include <soficlab/errors.hpp>
#include <soficlab/presentation.hpp>
#include <soficlab/structure.hpp>

#include <doctest.h>

using namespace soficlab;

namespace {

ShiftHandle orbit_of(const Alphabet& a, const Word& w) {
    std::vector<std::string> names;
    std::vector<Edge> edges;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
        names.push_back("c" + std::to_string(i));
        edges.push_back({i, (i + 1) % n, w[static_cast<size_t>(i)]});
    }
    return ShiftHandle::from_graph(LabeledGraph(a, names, edges));
}

} // namespace

TEST_CASE("derived shifts") {
    CHECK(shifts_equal(derived_shift(fixtures::shift("even")), fixtures::shift("point0")));
    CHECK(derived_shift(fixtures::shift("golden")).is_empty());
    CHECK(derived_shift(fixtures::shift("full2")).is_empty());
    CHECK(derived_shift(fixtures::shift("golden_even")).is_empty() == false);
}

TEST_CASE("component tree of the even shift") {
    const ComponentTree t = component_tree(fixtures::shift("even"));
    CHECK(t.depth == 1);
    REQUIRE(t.components.size() == 2);
    CHECK(t.components[1].level == 1);
    CHECK(t.components[1].parent == 0);
    CHECK(shifts_equal(t.components[1].closure, fixtures::shift("point0")));
    CHECK(t.components[1].derived.is_empty());
}

TEST_CASE("every component is irreducible and every periodic point lives in exactly one") {
    for (const char* name : {"even", "golden_even", "g1", "aab", "ex_5_4"}) {
        CAPTURE(name);
        const ShiftHandle y = fixtures::shift(name);
        const ComponentTree t = component_tree(y);
        for (const ComponentNode& c : t.components) CHECK_NOTHROW(c.closure.fischer());
        for (int n = 1; n <= 6; ++n)
            for_each_lyndon_word(y.presentation(), n, [&](const Word& w) {
                if (!presents_periodic(y.presentation(), w)) return;
                const ShiftHandle o = orbit_of(y.alphabet(), w);
                int hits = 0;
                for (const ComponentNode& c : t.components)
                    if (language_contained(o, c.closure) && (c.derived.is_empty() || !language_contained(o, c.derived))) ++hits;
                CHECK(hits == 1);
                CHECK_NOTHROW(locate_component(o, t));
            });
    }
}

TEST_CASE("containment and synchronizing overlap") {
    const ShiftHandle even = fixtures::shift("even");
    CHECK(language_contained(fixtures::shift("point0"), even));
    CHECK(language_contained(fixtures::shift("golden_even"), even));
    CHECK_FALSE(language_contained(even, fixtures::shift("golden_even")));
    CHECK_FALSE(meets_synchronizing(fixtures::shift("point0"), even));
    CHECK(meets_synchronizing(fixtures::shift("golden_even"), even));
    const ComponentTree t = component_tree(even);
    CHECK_THROWS_AS(locate_component(fixtures::shift("orbit01"), t), NotContainedError);
}

TEST_CASE("closures of periodic pieces merge equal shifts") {
    Alphabet a({"0", "1"});
    LabeledGraph g(a, {"p", "q", "r"}, {{0, 0, 0}, {1, 1, 0}, {2, 2, 1}, {0, 2, 1}});
    const auto closures = closure_of_periodic(ShiftHandle::from_graph(g));
    CHECK(closures.size() == 2);
}
