#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <soficlab/census.hpp>
#include <soficlab/period.hpp>
#include <soficlab/presentation.hpp>

#include <doctest.h>

using namespace soficlab;

TEST_CASE("periods of the corpus shifts") {
    CHECK(period_of(fixtures::shift("ex_5_4")).per == 2);
    CHECK(period_of(fixtures::shift("even")).per == 1);
    const PeriodReport aab = period_of(fixtures::shift("aab"));
    CHECK(aab.per == 2);
    CHECK(aab.q_gcd == 1);
    for (const char* name : {"even", "golden", "golden_even", "ex_5_4", "aab", "g1", "orbit01", "full2"}) {
        CAPTURE(name);
        const PeriodReport r = period_of(fixtures::shift(name));
        CHECK(r.per == r.p3_left);
        CHECK(r.per == oracle::cycle_gcd(fixtures::shift(name).fischer().graph));
        CHECK(r.consistent);
        // The Fischer cover has the least period among the corpus covers.
        CHECK(graph_period(fixtures::graph(name)) % r.per == 0);
    }
}

TEST_CASE("canonical cyclic partition") {
    const CyclicPartition c = canonical_cyclic_partition(fixtures::graph("ex_5_4"));
    CHECK(c.p == 2);
    CHECK(c.classes[0] == 0);
    const LabeledGraph g = fixtures::graph("ex_5_4");
    for (const Edge& e : g.edges()) CHECK((c.classes[e.src] + 1) % 2 == c.classes[e.dst]);
}

TEST_CASE("cyclic images") {
    const auto images = cyclic_images(CoverSpec::from_graph(fixtures::graph("aab")));
    REQUIRE(images.size() == 2);
    // Class of a1 reads "aa" or "ba"; class of a2 reads "aa" or "ab".
    CHECK(images[0].alphabet().size() >= 2);
    CHECK(block_symbol(Alphabet({"a", "b"}), {0, 1}) == "ab");
    CHECK(block_symbol(Alphabet({"aa", "b"}), {0, 1}) == "aa.b");
}

TEST_CASE("p-periodicity verdicts") {
    CHECK(is_p_periodic(fixtures::shift("even"), 1).verdict == Verdict::Yes);
    const Verdict3 even2 = is_p_periodic(fixtures::shift("even"), 2);
    CHECK(even2.verdict == Verdict::No);
    CHECK(even2.witness["kind"] == "PERIOD_OBSTRUCTION");
    CHECK(even2.witness["least_period"] == 1);
    const Verdict3 cyc = is_p_periodic(fixtures::shift("cycle3_edge"), 3);
    CHECK(cyc.verdict == Verdict::Yes);
    CHECK(cyc.certificate["kind"] == "SFT_EXACT");
    CHECK(is_p_periodic(fixtures::shift("cycle3_edge"), 2).verdict == Verdict::No);
    // (01)^infinity through a presentation with repeated labels, so the sofic path runs.
    const LabeledGraph four(Alphabet({"0", "1"}), {"a", "b", "c", "d"}, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 0, 1}});
    const Verdict3 orbit = is_p_periodic(ShiftHandle::from_graph(four), 2);
    CHECK(orbit.verdict == Verdict::Yes);
    CHECK(orbit.certificate["kind"] == "WINDOW_COLORING");
    // a^infinity has least period 1.
    CHECK(is_p_periodic(fixtures::shift("aab"), 2).verdict == Verdict::No);
}
