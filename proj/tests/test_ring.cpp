#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcode/ring.hpp"

#include <set>

using namespace tcode;

TEST_CASE("base ring tables") {
    CHECK(br_mul(kRu, kRu) == kR0);  // u^2 = 0
    CHECK(br_mul(kR1u, kR1u) == kR1);
    for (BaseR x = 0; x < 4; ++x) {
        CHECK(br_mul(x, kR1) == x);
        CHECK(br_add(x, x) == kR0);
    }
    CHECK(br_lee(kR0) == 0);
    CHECK(br_lee(kR1) == 1);
    CHECK(br_lee(kRu) == 2);
    CHECK(br_lee(kR1u) == 1);
}

TEST_CASE("gray map on the base ring") {
    // a + bu -> (b, a + b)
    CHECK(br_gray_first(kR0) == 0);
    CHECK(br_gray_second(kR0) == 0);
    CHECK(br_gray_first(kRu) == 1);
    CHECK(br_gray_second(kRu) == 1);
    CHECK(br_gray_first(kR1) == 0);
    CHECK(br_gray_second(kR1) == 1);
    CHECK(br_gray_first(kR1u) == 1);
    CHECK(br_gray_second(kR1u) == 0);

    std::set<std::pair<unsigned, unsigned>> images;
    for (BaseR x = 0; x < 4; ++x) {
        images.insert({br_gray_first(x), br_gray_second(x)});
        for (BaseR y = 0; y < 4; ++y) {
            // additivity
            CHECK(br_gray_first(br_add(x, y)) == (br_gray_first(x) ^ br_gray_first(y)));
            CHECK(br_gray_second(br_add(x, y)) == (br_gray_second(x) ^ br_gray_second(y)));
        }
    }
    CHECK(images.size() == 4);  // bijection onto GF(2)^2
}

TEST_CASE("ring arithmetic over R_3") {
    RingR ring{GF2m(3)};
    const RElem u{0, 1}, one{1, 0};
    CHECK((ring.mul(u, u) == RElem{0, 0}));
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b) {
            const RElem x{a, b};
            CHECK((ring.add(x, x) == RElem{0, 0}));
            CHECK((ring.mul(x, one) == x));
        }
    // (beta u)(x0 + x1 u) = beta x0 u
    GF2m f(3);
    for (uint32_t beta = 1; beta < 8; ++beta)
        for (uint32_t x0 = 1; x0 < 8; ++x0)
            for (uint32_t x1 = 0; x1 < 8; ++x1)
                CHECK((ring.mul({0, beta}, {x0, x1}) == RElem{0, f.mul(beta, x0)}));
}

TEST_CASE("unit inverses in R_3") {
    RingR ring{GF2m(3)};
    CHECK((ring.inv({1, 0}) == RElem{1, 0}));
    CHECK((ring.inv({1, 1}) == RElem{1, 1}));  // (1+u)^2 = 1
    unsigned units = 0;
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b) {
            const RElem x{a, b};
            if (!ring.is_unit(x)) {
                CHECK_THROWS_AS(ring.inv(x), std::invalid_argument);
                continue;
            }
            ++units;
            CHECK((ring.mul(x, ring.inv(x)) == RElem{1, 0}));
        }
    CHECK(units == 56);
}

TEST_CASE("frobenius") {
    RingR ring{GF2m(3)};
    CHECK((ring.frobenius({0, 1}) == RElem{0, 1}));  // u is fixed
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b) {
            const RElem x{a, b};
            RElem y = x;
            for (unsigned j = 0; j < 3; ++j) y = ring.frobenius(y);
            CHECK((y == x));  // order divides m
            for (uint32_t c = 0; c < 8; ++c)
                for (uint32_t d = 0; d < 8; ++d) {
                    const RElem z{c, d};
                    CHECK((ring.frobenius(ring.add(x, z)) ==
                           ring.add(ring.frobenius(x), ring.frobenius(z))));
                }
        }
}

TEST_CASE("trace to the base ring") {
    RingR ring{GF2m(3)};
    CHECK(ring.trace({0, 0}) == kR0);
    CHECK(ring.trace({1, 0}) == kR1);  // tr(1) = 1 for odd m

    // closed form equals the sum of Frobenius iterates
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b) {
            const RElem x{a, b};
            RElem sum{0, 0}, it = x;
            for (unsigned j = 0; j < 3; ++j) {
                sum = ring.add(sum, it);
                it = ring.frobenius(it);
            }
            REQUIRE(sum.alpha <= 1);  // the sum lands in the base subring
            REQUIRE(sum.beta <= 1);
            CHECK(ring.trace(x) == BaseR(sum.alpha | (sum.beta << 1)));
        }
}

TEST_CASE("trace is R-linear") {
    RingR ring{GF2m(3)};
    for (BaseR r = 0; r < 4; ++r)
        for (uint32_t a = 0; a < 8; ++a)
            for (uint32_t b = 0; b < 8; ++b) {
                const RElem x{a, b};
                CHECK(ring.trace(ring.mul(ring.embed(r), x)) == br_mul(r, ring.trace(x)));
            }
}

TEST_CASE("unit enumeration") {
    RingR r3{GF2m(3)};
    const auto units3 = r3.enumerate_units();
    CHECK(units3.size() == 56);
    CHECK(r3.unit_count() == 56);
    CHECK((units3.front() == RElem{1, 0}));
    for (size_t i = 1; i < units3.size(); ++i) {
        const auto &p = units3[i - 1], &q = units3[i];
        CHECK((p.alpha < q.alpha || (p.alpha == q.alpha && p.beta < q.beta)));
    }

    RingR r5{GF2m(5)};
    CHECK(r5.enumerate_units().size() == 992);

    // every element is a unit or nilpotent, never both
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b)
            CHECK(r3.is_unit({a, b}) != r3.is_nilpotent({a, b}));
}
