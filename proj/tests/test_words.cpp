#include "support/oracles.hpp"

#include <soficlab/errors.hpp>
#include <soficlab/words.hpp>

#include <doctest.h>

#include <algorithm>

using namespace soficlab;

TEST_CASE("primitive, rotation and Lyndon words agree with brute force") {
    for (int n = 1; n <= 7; ++n)
        for (const Word& w : oracle::all_words(2, n)) {
            CHECK(is_primitive(w) == oracle::primitive(w));
            Word best = w;
            for (int r = 1; r < n; ++r) {
                Word rot(w.begin() + r, w.end());
                rot.insert(rot.end(), w.begin(), w.begin() + r);
                best = std::min(best, rot);
            }
            CHECK(least_rotation(w) == best);
            CHECK(is_lyndon(w) == (oracle::primitive(w) && best == w));
            const Word root = primitive_root(w);
            CHECK(power(root, n / static_cast<int>(root.size())) == w);
        }
}

TEST_CASE("primitive word construction validates its input") {
    CHECK_THROWS_AS(PrimitiveWord::from({}), ValidationError);
    CHECK_THROWS_AS(PrimitiveWord::from({0, 1, 0, 1}), ValidationError);
    CHECK(PrimitiveWord::from({1, 0}).length() == 2);
}

TEST_CASE("integer power saturates") {
    CHECK(integer_power(3, 4) == 81);
    CHECK(integer_power(2, 70) == UINT64_MAX);
    CHECK(concat({1}, {2, 3}) == Word{1, 2, 3});
}
