#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrw/bounds.hpp"
#include "lrw/errors.hpp"

using namespace lrw;

TEST_CASE("bound_lk closed form at small arguments") {
    CHECK(bound_lk(0, 5) == 6);
    CHECK(bound_lk(0, 1) == 2);
    CHECK(bound_lk(1, 2) == 9); // 1 + 2 + 2*3
    CHECK(bound_lk(2, 2) == 27); // 1 + 2 + 6 + 18
    CHECK(bound_lk(3, 1) == 1 + 1 + 2 + 4 + 8);
}

TEST_CASE("bound_lk grows in both arguments") {
    for (int k = 0; k < 4; ++k)
        for (int c = 1; c < 6; ++c) {
            CHECK(bound_lk(k + 1, c) > bound_lk(k, c));
            CHECK(bound_lk(k, c + 1) > bound_lk(k, c));
        }
}

TEST_CASE("bound_plength pinned values") {
    // exponent 1 + 1 + 2 + 4*6 + 8 = 36
    CHECK(bound_plength(1, 1, 2) == BigBound(3) << 36);
    // exponent 1 + 4 + 4 + 8*8 + 32 = 105
    CHECK(bound_plength(1, 2, 2) == BigBound(3) << 105);
    // p = 0, s = 0: (2*0+1) * q^(q fold) -> exponent 0+0+0+1*0+q
    CHECK(bound_plength(0, 0, 2) == BigBound(1) << 2);
    CHECK(bound_plength(0, 0, 3) == 27);
}

TEST_CASE("bound_plength rejects runaway exponents") {
    CHECK_THROWS_WITH_AS(bound_plength(5, 5, 5), doctest::Contains("SizeLimitExceeded"), error);
}

TEST_CASE("bound_main composes the two bounds") {
    for (int p = 0; p <= 2; ++p) {
        MainBound mb = bound_main(p, 2);
        CHECK(mb.k == p + 1);
        CHECK(mb.chain_length == bound_plength(p, p + 1, 2));
        CHECK(mb.value == bound_lk(mb.k, mb.chain_length));
    }
}

TEST_CASE("bound_main is monotone in the width target") {
    BigBound prev = 0;
    for (int p = 0; p <= 2; ++p) {
        MainBound mb = bound_main(p, 2);
        CHECK(mb.value > prev);
        prev = mb.value;
    }
}
