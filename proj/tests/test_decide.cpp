#include "support/fixtures.hpp"

#include <soficlab/decide.hpp>
#include <soficlab/errors.hpp>
#include <soficlab/verify.hpp>

#include <doctest.h>

using namespace soficlab;

TEST_CASE("s-factorizability of a fixed point into golden and even") {
    const ShiftHandle z = fixtures::shift("point0");
    const ShiftHandle y = fixtures::shift("golden_even");
    const Verdict3 v = decide_s_factorizable(z, y);
    REQUIRE(v.verdict == Verdict::No);
    CHECK(v.witness["kind"] == "COUNT");
    CHECK(v.witness["n"] == 1);
    CHECK(v.witness["q"] == 1);
    CHECK(v.witness["bound"] == 0);
    CHECK(revalidate("s-fact", z, y.presentation(), v).ok);

    const Verdict3 f = decide_factorizable(z, y);
    REQUIRE(f.verdict == Verdict::Yes);
    CHECK(f.certificate["kind"] == "COMPONENT");
    CHECK(f.certificate["level"] == 1);
    CHECK(revalidate("factorizable", z, y.presentation(), f).ok);
}

TEST_CASE("entropy and period witnesses") {
    const Verdict3 big = decide_s_factorizable(fixtures::shift("full2"), fixtures::shift("even"));
    CHECK(big.verdict == Verdict::No);
    CHECK(big.witness["kind"] == "ENTROPY");
    // aab has period 2; a fixed point cannot go in.
    const Verdict3 per = decide_s_factorizable(fixtures::shift("point0"), fixtures::shift("aab"));
    CHECK(per.verdict == Verdict::No);
    CHECK(revalidate("s-fact", fixtures::shift("point0"), fixtures::graph("aab"), per).ok);
}

TEST_CASE("embedding into an edge shift") {
    const ShiftHandle w = fixtures::shift("golden_edge");
    const Verdict3 orbit = decide_embed_irreducible_sft(fixtures::shift("orbit01"), w);
    CHECK(orbit.verdict == Verdict::Yes);
    CHECK(revalidate("sft-embed", fixtures::shift("orbit01"), w.presentation(), orbit).ok);
    const Verdict3 self = decide_embed_irreducible_sft(fixtures::shift("golden"), w);
    CHECK(self.verdict == Verdict::Yes);
    CHECK(self.certificate["kind"] == "CONJUGATE");
    CHECK_THROWS_AS(decide_embed_irreducible_sft(fixtures::shift("point0"), fixtures::shift("even")), ValidationError);
    // A 2-cycle cannot be mapped into a 3-cycle.
    const Verdict3 period = decide_embed_irreducible_sft(fixtures::shift("orbit01"), fixtures::shift("cycle3_edge"));
    CHECK(period.verdict == Verdict::No);
    CHECK(period.witness["kind"] == "PERIOD");
}

TEST_CASE("through a cover") {
    const CoverSpec pi = CoverSpec::from_graph(fixtures::graph("golden_even"));
    const Verdict3 v = decide_embed_through_cover(fixtures::shift("point0"), pi);
    CHECK(v.verdict == Verdict::No);
    CHECK(v.witness["bound_kind"] == "r");
    CHECK(revalidate("through-cover", fixtures::shift("point0"), pi.graph, v).ok);
}

TEST_CASE("AI-factorizability needs an entropy gap and ships a degree-one cover") {
    CHECK_THROWS_AS(decide_ai_factorizable(fixtures::shift("even"), fixtures::shift("even")), PreconditionError);
    // The fixed point a^infinity of the vertex-labelled example is receptive.
    const ShiftHandle y = fixtures::shift("g1");
    const Symbol a = *y.alphabet().find("a");
    const ShiftHandle z = ShiftHandle::from_graph(LabeledGraph(y.alphabet(), {"p"}, {{0, 0, a}}));
    const Verdict3 v = decide_ai_factorizable(z, y);
    REQUIRE(v.verdict == Verdict::Yes);
    CHECK(v.certificate["ai_cover"]["degree"] == 1);
    CHECK(revalidate("ai-fact", z, fixtures::graph("g1"), v).ok);
    const Verdict3 plain = decide_ai_factorizable(fixtures::shift("point0"), fixtures::shift("golden"));
    REQUIRE(plain.verdict == Verdict::Yes);
    CHECK(plain.certificate["ai_cover"]["construction"] == "fischer");
}

TEST_CASE("golden and even into even: both sides reported") {
    const Verdict3 v = decide_factorizable(fixtures::shift("golden_even"), fixtures::shift("even"));
    CHECK(v.verdict != Verdict::No);
    CHECK(v.certificate.contains("components"));
}

TEST_CASE("helpers") {
    CHECK(is_sft(fixtures::shift("golden")));
    CHECK_FALSE(is_sft(fixtures::shift("even")));
    CHECK(unlabeled_isomorphic(fixtures::graph("golden"), fixtures::graph("golden_edge")));
    CHECK(unlabeled_isomorphic(fixtures::graph("golden"), fixtures::graph("even")));
    CHECK_FALSE(unlabeled_isomorphic(fixtures::graph("golden"), fixtures::graph("two_cycle00")));
}
