#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <soficlab/entropy.hpp>
#include <soficlab/presentation.hpp>

#include <doctest.h>

#include <cmath>

using namespace soficlab;

TEST_CASE("entropy enclosures bracket closed forms") {
    const double golden = std::log((1 + std::sqrt(5.0)) / 2);
    const EntropyEnclosure even = entropy(fixtures::shift("even"));
    CHECK(even.lower_d() <= golden);
    CHECK(even.upper_d() >= golden);
    CHECK(even.width() <= kDefaultEntropyTol);
    const EntropyEnclosure full = entropy(fixtures::shift("full2"));
    CHECK(full.lower_d() <= std::log(2.0));
    CHECK(full.upper_d() >= std::log(2.0));
    // Plastic number: x^3 = x + 1.
    const EntropyEnclosure z = entropy(fixtures::shift("golden_even"));
    CHECK(z.midpoint() == doctest::Approx(0.2811995743).epsilon(1e-8));
    const EntropyEnclosure zero = entropy(fixtures::shift("orbit01"));
    CHECK(zero.zero_entropy);
    CHECK(zero.upper == 0);
}

TEST_CASE("entropy agrees with power iteration on random graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        const LabeledGraph g = oracle::random_presentation(rng, 5, 2);
        const EntropyEnclosure h = entropy_of_graph(g);
        const double expect = oracle::log_spectral_radius(g);
        CHECK(h.lower_d() <= expect + 1e-7);
        CHECK(h.upper_d() >= expect - 1e-7);
    }
}

TEST_CASE("Collatz-Wielandt certificate holds exactly") {
    const IntMatrix a = adjacency_matrix(fixtures::graph("g1"));
    const PerronBounds b = perron_bounds(a);
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        mpq_class row = 0;
        for (size_t j = 0; j < n; ++j) row += mpq_class(a[i][j]) * b.right[j];
        CHECK(row >= b.lower * b.right[i]);
        CHECK(row <= b.upper * b.right[i]);
    }
}

TEST_CASE("comparison and log enclosure") {
    CHECK(compare_entropy(entropy(fixtures::shift("golden_even")), entropy(fixtures::shift("even"))) == -1);
    CHECK(compare_entropy(entropy(fixtures::shift("even")), entropy(fixtures::shift("golden"))) == 0);
    const auto [lo, hi] = log_enclosure(mpq_class(2));
    CHECK(lo.get_d() <= std::log(2.0));
    CHECK(hi.get_d() >= std::log(2.0));
    CHECK(matrix_power(adjacency_matrix(fixtures::graph("golden_edge")), 4)[0][0] == 5);
}
