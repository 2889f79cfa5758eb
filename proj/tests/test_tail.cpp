#include "support/fixtures.hpp"

#include <soficlab/census.hpp>
#include <soficlab/tail.hpp>

#include <doctest.h>

#include <cmath>

using namespace soficlab;

TEST_CASE("path growth upper bound dominates path counts") {
    for (const char* name : {"even", "golden_even", "g1", "aab", "point0"}) {
        const LabeledGraph g = fixtures::graph(name);
        const GrowthUpper u = path_growth_upper(g);
        for (int m = 1; m <= 12; ++m) {
            const BigInt paths = [&] {
                std::vector<BigInt> x(static_cast<size_t>(g.vertex_count()), 1);
                for (int i = 0; i < m; ++i) {
                    std::vector<BigInt> y(x.size(), 0);
                    for (const Edge& e : g.edges()) y[static_cast<size_t>(e.src)] += x[static_cast<size_t>(e.dst)];
                    x = y;
                }
                BigInt s = 0;
                for (const BigInt& v : x) s += v;
                return s;
            }();
            CHECK(paths.convert_to<double>() <= u.c.get_d() * std::pow(u.rate.get_d(), m) * (1 + 1e-9));
        }
    }
}

TEST_CASE("tail certificates") {
    const auto finite = tail_certificate(fixtures::shift("point0"), fixtures::shift("even").fischer().graph, 1);
    REQUIRE(finite);
    CHECK(finite->record["kind"] == "FINITE");
    CHECK(finite->crossover == 2);

    const ShiftHandle z = fixtures::shift("golden_even");
    const LabeledGraph cmp = fixtures::shift("even").fischer().graph;
    const auto growth = tail_certificate(z, cmp, 1);
    REQUIRE(growth);
    CHECK(growth->record["kind"] == "GROWTH");
    CHECK(tail_record_consistent(growth->record, 1));
    // The certified tail holds where it claims to, checked directly.
    for (int m = growth->crossover; m <= growth->crossover + 1; ++m) CHECK(count_q(z, m) <= count_s(fixtures::shift("even"), m));

    // Tampering with the record breaks the replay.
    nlohmann::json bad = growth->record;
    bad["crossover"] = 1;
    bad["log_mu"] = bad["log_z_rate"].get<double>() - 0.5;
    CHECK_FALSE(tail_record_consistent(bad, 1));
}

TEST_CASE("no certificate when the comparison side grows no faster") {
    CHECK_FALSE(tail_certificate(fixtures::shift("full2"), fixtures::shift("even").fischer().graph, 1, 30));
}
