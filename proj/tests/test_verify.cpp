#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <soficlab/census.hpp>
#include <soficlab/errors.hpp>
#include <soficlab/presentation.hpp>
#include <soficlab/verify.hpp>

#include <doctest.h>

using namespace soficlab;

TEST_CASE("fiber product pairs equally labelled edges") {
    const LabeledGraph g = fixtures::graph("even");
    const FiberProduct fp = fiber_product(g);
    // Two 0-edges and one 1-edge: 4 + 1 pairs.
    CHECK(fp.graph.edge_count() == 5);
    for (size_t e = 0; e < fp.edge_pairs.size(); ++e)
        CHECK(g.edge(fp.edge_pairs[e].first).label == g.edge(fp.edge_pairs[e].second).label);
}

TEST_CASE("injectivity, finite-to-one and degree") {
    const CoverSpec fischer{fixtures::shift("even").fischer().graph};
    CHECK(injective_on(fischer, SubSft::whole(fischer.graph)) == false); // 0^infinity has two preimages
    CHECK(finite_to_one(fischer));
    CHECK(degree(fischer) == 1);
    const CoverSpec nonres = CoverSpec::from_graph(fixtures::graph("golden_even"));
    CHECK(finite_to_one(nonres));
    CHECK(degree(nonres) == 1);
    // A diamond: two parallel edges with the same label.
    Alphabet a({"0", "1"});
    const CoverSpec diamond = CoverSpec::from_graph(LabeledGraph(a, {"p", "q"}, {{0, 1, 0}, {0, 1, 0}, {1, 0, 1}}));
    CHECK_FALSE(finite_to_one(diamond));
    CHECK_THROWS_AS(degree(diamond), NotFiniteToOne);
    // Two copies of the full shift: degree 2.
    const CoverSpec doubled = CoverSpec::from_graph(LabeledGraph(a, {"p", "q"}, {{0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(finite_to_one(doubled));
    CHECK(degree(doubled) == 2);
    for (const char* name : {"even", "golden", "golden_even", "ex_5_4", "aab", "g1"})
        CHECK(degree(CoverSpec{fixtures::shift(name).fischer().graph}) == 1);
}

TEST_CASE("brute-force counts agree with the oracle") {
    for (const char* name : {"even", "golden_even", "aab"}) {
        const ShiftHandle y = fixtures::shift(name);
        for (int n = 1; n <= 7; ++n) {
            CHECK(brute_q(y, n) == oracle::least_period_points(y.presentation(), n));
            CHECK(brute_r(y.fischer().graph, n) == count_r(y.fischer().graph, n));
        }
        CHECK(brute_language(y, 5).size() == [&] {
            std::uint64_t c = 0;
            for (int n = 1; n <= 5; ++n) c += oracle::language_count(y.presentation(), n);
            return c;
        }());
    }
}

TEST_CASE("synchronizing refutation agrees with the magic-word test") {
    for (const char* name : {"even", "golden_even", "g1", "aab"}) {
        const ShiftHandle y = fixtures::shift(name);
        for (int n = 1; n <= 4; ++n)
            for (const Word& w : oracle::all_words(y.alphabet().size(), n)) {
                if (!oracle::readable(y.presentation(), w)) continue;
                const bool sync = is_synchronizing(y, w);
                const auto ref = refute_synchronizing(y, w, 4);
                if (sync) CHECK_FALSE(ref);
                if (ref) CHECK_FALSE(sync);
            }
    }
    const ShiftHandle even = fixtures::shift("even");
    CHECK(refute_synchronizing(even, fixtures::word(even, "0"), 2));
}

TEST_CASE("revalidation rejects tampered witnesses") {
    const ShiftHandle z = fixtures::shift("point0");
    const LabeledGraph y = fixtures::graph("golden_even");
    Verdict3 forged = Verdict3::no({{"kind", "COUNT"}, {"m", 3}, {"n", 3}, {"q", 1}, {"bound", 0}, {"bound_kind", "rec"}});
    CHECK_FALSE(revalidate("s-fact", z, y, forged).ok);
    Verdict3 wrong_entropy = Verdict3::no({{"kind", "ENTROPY"}});
    CHECK_FALSE(revalidate("s-fact", z, y, wrong_entropy).ok);
    CHECK(revalidate("s-fact", z, y, Verdict3::unknown("nothing")).ok);
    CHECK_THROWS_AS(revalidate("nope", z, y, forged), ValidationError);
}
