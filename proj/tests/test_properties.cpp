// Seeded random properties across modules.
#include "support/oracles.hpp"

#include <soficlab/census.hpp>
#include <soficlab/decide.hpp>
#include <soficlab/entropy.hpp>
#include <soficlab/period.hpp>
#include <soficlab/presentation.hpp>
#include <soficlab/structure.hpp>
#include <soficlab/verify.hpp>

#include <doctest.h>

using namespace soficlab;

namespace {

constexpr std::uint64_t kSeed = 424242;

} // namespace

TEST_CASE("census chain s <= rec <= q and s <= r(Fischer)") {
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 40; ++i) {
        const ShiftHandle y = ShiftHandle::from_graph(oracle::random_presentation(rng, 4, 2));
        const CensusTable t = census(y, 7);
        for (const CensusRow& r : t.rows) {
            CHECK(r.s <= r.rec);
            CHECK(r.rec <= r.q);
            CHECK(r.s <= count_r(y.fischer().graph, r.n));
        }
    }
}

TEST_CASE("Fischer cover is a minimal right-resolving presentation of the same shift") {
    std::mt19937_64 rng(kSeed + 1);
    for (int i = 0; i < 40; ++i) {
        const LabeledGraph g = oracle::random_presentation(rng, 4, 2);
        const ShiftHandle y = ShiftHandle::from_graph(g);
        const FischerCover& f = y.fischer();
        CHECK(f.graph.right_resolving());
        for (int n = 1; n <= 6; ++n)
            for (const Word& w : oracle::all_words(2, n)) CHECK(oracle::readable(f.graph, w) == oracle::readable(y.presentation(), w));
        // Any right-resolving irreducible presentation has at least as many vertices.
        const SubsetAutomaton dfa = determinize(y.presentation());
        CHECK(f.graph.vertex_count() <= dfa.state_count());
        CHECK(period_of(y, 8).per == period_of(y, 8).p3_left);
        CHECK(degree(CoverSpec{f.graph}) == 1);
    }
}

TEST_CASE("entropy is monotone under subshifts and bounded by the alphabet") {
    std::mt19937_64 rng(kSeed + 2);
    for (int i = 0; i < 25; ++i) {
        const ShiftHandle y = ShiftHandle::from_graph(oracle::random_presentation(rng, 4, 2));
        const EntropyEnclosure h = entropy(y);
        CHECK(h.lower >= 0);
        CHECK(h.lower_d() <= std::log(2.0) + 1e-12);
        CHECK(compare_entropy(entropy(derived_shift(y).is_empty() ? y : derived_shift(y)), h) <= 0);
    }
}

TEST_CASE("verdicts from every procedure replay") {
    std::mt19937_64 rng(kSeed + 3);
    int decided = 0;
    for (int i = 0; i < 20; ++i) {
        const LabeledGraph yg = oracle::random_presentation(rng, 3, 2);
        const LabeledGraph zg = oracle::random_presentation(rng, 2, 2);
        const ShiftHandle y = ShiftHandle::from_graph(yg), z = ShiftHandle::from_graph(zg);
        for (const std::string proc : {"s-fact", "factorizable", "through-cover"}) {
            Verdict3 v;
            if (proc == "s-fact") v = decide_s_factorizable(z, y, 8);
            else if (proc == "factorizable") v = decide_factorizable(z, y, 8);
            else v = decide_embed_through_cover(z, CoverSpec::from_graph(y.presentation()), 8);
            if (v.verdict == Verdict::Unknown) continue;
            ++decided;
            const Replay r = revalidate(proc, z, proc == "through-cover" ? y.presentation() : yg, v);
            CAPTURE(proc);
            CAPTURE(r.detail);
            CHECK(r.ok);
        }
    }
    CHECK(decided > 0);
}

TEST_CASE("p-periodic YES and NO are consistent with least periods") {
    std::mt19937_64 rng(kSeed + 4);
    for (int i = 0; i < 30; ++i) {
        const ShiftHandle y = ShiftHandle::from_graph(oracle::random_presentation(rng, 4, 2));
        for (int p = 2; p <= 3; ++p) {
            const Verdict3 v = is_p_periodic(y, p);
            if (v.verdict != Verdict::Yes) continue;
            for (int n = 1; n <= 8; ++n)
                if (n % p) CHECK(oracle::least_period_points(y.presentation(), n) == 0);
        }
    }
}
