#include "support/fixtures.hpp"

#include <soficlab/census.hpp>
#include <soficlab/entropy.hpp>
#include <soficlab/errors.hpp>
#include <soficlab/forge.hpp>
#include <soficlab/presentation.hpp>

#include <doctest.h>

using namespace soficlab;

TEST_CASE("receptive cover surgery") {
    const ShiftHandle even = fixtures::shift("even");
    const CoverSpec pi{even.fischer().graph};
    const ForgeResult r = forge_receptive_cover(pi, PrimitiveWord::from(fixtures::word(even, "1")));
    CHECK(shifts_equal(ShiftHandle::from_graph(r.graph), even));
    CHECK(count_r(r.graph, 1) >= 1);
    CHECK(graph_period(r.graph) == graph_period(pi.graph));
    CHECK_THROWS_AS(forge_receptive_cover(pi, PrimitiveWord::from(fixtures::word(even, "0"))), NotReceptiveError);

    // A point the cover misses gets a lift: 2-cycle presentation of 0^infinity style gaps.
    const ShiftHandle golden = fixtures::shift("golden_even");
    const CoverSpec gz = CoverSpec::from_graph(golden.fischer().graph);
    const Word w = fixtures::word(golden, "100");
    const ForgeResult r3 = forge_receptive_cover(gz, PrimitiveWord::from(w));
    CHECK(presents_periodic(r3.graph, w));
    CHECK(shifts_equal(ShiftHandle::from_graph(r3.graph), golden));
}

TEST_CASE("AI cover of the vertex-labelled example") {
    const ShiftHandle y = fixtures::shift("g1");
    const PrimitiveWord a = PrimitiveWord::from(fixtures::word(y, "a"));
    const ForgeResult hat = forge_ai_cover(y, a);
    CHECK(hat.validation["image_equal"] == true);
    CHECK(hat.validation["hat_point_synchronizing"] == true);
    CHECK(hat.validation["unique_lifts_up_to_5"] == true);
    for (Symbol s = 0; s < hat.graph.alphabet().size(); ++s)
        if (s >= y.alphabet().size()) CHECK(hat.graph.alphabet().name(s).rfind("^", 0) == 0);
    const CoverSpec cover = ai_sft_cover(y, a);
    CHECK(finite_to_one(cover));
    CHECK(degree(cover) == 1);
    CHECK(shifts_equal(cover.codomain(), y));
    CHECK_THROWS_AS(forge_ai_cover(fixtures::shift("orbit01"), PrimitiveWord::from({0, 1})), ZeroEntropyError);
}

TEST_CASE("injective sub-SFT") {
    const ShiftHandle even = fixtures::shift("even");
    const CoverSpec pi{even.fischer().graph};
    const ForgeResult w = extract_injective_sub(pi, mpq_class(3, 10));
    CHECK(injective_on(pi, w.sub()));
    CHECK(entropy_of_graph(w.graph).lower >= entropy(even).upper - mpq_class(3, 10));
    CHECK(is_irreducible(w.graph));
    CHECK_THROWS_AS(extract_injective_sub(pi, mpq_class(0)), PreconditionError);
    CHECK_THROWS_AS(extract_injective_sub(CoverSpec{fixtures::graph("point0")}, mpq_class(1, 10)), ZeroEntropyError);

    // A non-injective cover: two parallel equally labelled paths.
    const CoverSpec two = CoverSpec::from_graph(fixtures::graph("golden_even"));
    const ForgeResult sub = extract_injective_sub(two, mpq_class(1, 5));
    CHECK(injective_on(two, sub.sub()));
}

TEST_CASE("enlarging with a periodic orbit") {
    const ShiftHandle even = fixtures::shift("even");
    const CoverSpec pi{even.fischer().graph};
    const ForgeResult w = extract_injective_sub(pi, mpq_class(3, 10));
    // The 1-loop of the Fischer graph.
    int loop = -1;
    for (int e = 0; e < pi.graph.edge_count(); ++e)
        if (pi.graph.edge(e).src == pi.graph.edge(e).dst) loop = e;
    REQUIRE(loop >= 0);
    if (presents_periodic(w.graph, Word{pi.graph.edge(loop).label})) {
        CHECK_THROWS_AS(enlarge_with_orbit(pi, w.sub(), {loop}), PreconditionError);
    } else {
        const ForgeResult t = enlarge_with_orbit(pi, w.sub(), {loop});
        CHECK(injective_on(pi, t.sub()));
        CHECK(presents_periodic(t.graph, Word{pi.graph.edge(loop).label}));
    }
}

TEST_CASE("growing periodic support up to a bound") {
    const ShiftHandle even = fixtures::shift("even");
    const CoverSpec pi{even.fischer().graph};
    const ForgeResult g = grow_periodic_support(pi, mpq_class(3, 10), 4);
    CHECK(injective_on(pi, g.sub()));
    for (int m = 1; m <= 4; ++m) CHECK(sft_qn_oracle(g.graph, m) == count_r(pi.graph, m));
}
