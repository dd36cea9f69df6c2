#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcode/gf2m.hpp"

using namespace tcode;

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(GF2m(1), std::invalid_argument);
    CHECK_THROWS_AS(GF2m(21), std::invalid_argument);
    // x^3 + 1 = (x + 1)(x^2 + x + 1) is reducible
    CHECK_THROWS_AS(GF2m(3, 0b1001), std::invalid_argument);
    // wrong degree
    CHECK_THROWS_AS(GF2m(3, 0b10011), std::invalid_argument);
    // x^3 + x^2 + 1 is the other degree-3 irreducible
    CHECK_NOTHROW(GF2m(3, 0b1101));
}

TEST_CASE("default reduction polynomials are the smallest irreducible masks") {
    CHECK(default_reduction_poly(2) == 0b111);
    CHECK(default_reduction_poly(3) == 0b1011);
    CHECK(default_reduction_poly(4) == 0b10011);
    CHECK(default_reduction_poly(5) == 0b100101);
    // x^5 + x + 1 factors, so it must be skipped
    CHECK(!poly_is_irreducible(0b100011, 5));
    for (unsigned m = 2; m <= 20; ++m) CHECK(poly_is_irreducible(default_reduction_poly(m), m));
}

TEST_CASE("addition is coefficient-wise xor") {
    GF2m f(3);
    CHECK(f.add(0b011, 0b101) == 0b110);
    for (uint32_t a = 0; a < 8; ++a) {
        CHECK(f.add(a, a) == 0);
        CHECK(f.add(a, 0) == a);
    }
}

TEST_CASE("multiplication over GF(8)") {
    GF2m f(3);
    // x * x^2 = x^3 = x + 1 modulo x^3 + x + 1
    CHECK(f.mul(0b010, 0b100) == 0b011);
    for (uint32_t a = 0; a < 8; ++a) CHECK(f.mul(a, 1) == a);
    for (uint32_t a = 1; a < 8; ++a) CHECK(f.mul(a, f.pow(a, 6)) == 1);
}

TEST_CASE("field axioms, exhaustive for m = 3") {
    GF2m f(3);
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b) {
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (uint32_t c = 0; c < 8; ++c) {
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
}

TEST_CASE("exponentiation") {
    GF2m f(3);
    CHECK(f.pow(0, 0) == 1);  // empty product convention
    CHECK(f.pow(0, 5) == 0);
    for (uint32_t a = 1; a < 8; ++a) CHECK(f.pow(a, 7) == 1);
    for (uint32_t a = 0; a < 8; ++a) CHECK(f.pow(a, 2) == f.mul(a, a));
}

TEST_CASE("inverses") {
    GF2m f(3);
    CHECK(f.inv(1) == 1);
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    for (uint32_t a = 1; a < 8; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(f.inv(a)) == a);
    }
}

TEST_CASE("trace basics") {
    for (unsigned m : {2u, 3u, 4u, 5u}) {
        GF2m f(m);
        CHECK(f.tr(0) == 0);
        CHECK(f.tr(1) == m % 2);
    }
    GF2m f(3);
    unsigned zeros = 0;
    for (uint32_t a = 0; a < 8; ++a) zeros += f.tr(a) == 0;
    CHECK(zeros == 4);  // the trace map is balanced
}

TEST_CASE("trace is additive and Frobenius-invariant") {
    for (unsigned m : {3u, 8u}) {
        GF2m f(m);
        for (uint32_t a = 0; a < f.order(); ++a) {
            CHECK(f.tr(f.mul(a, a)) == f.tr(a));
            for (uint32_t b = 0; b < f.order(); ++b)
                CHECK(f.tr(f.add(a, b)) == (f.tr(a) ^ f.tr(b)));
        }
    }
}

TEST_CASE("character sum balance: sum over x of (-1)^tr(zx) = 0 for z != 0") {
    for (unsigned m : {2u, 3u, 5u, 8u}) {
        GF2m f(m);
        for (uint32_t z = 1; z < f.order(); ++z) {
            int64_t s = 0;
            for (uint32_t x = 0; x < f.order(); ++x) s += f.tr(f.mul(z, x)) ? -1 : 1;
            CHECK(s == 0);
        }
    }
}

TEST_CASE("square roots") {
    GF2m f(3);
    CHECK(f.sqrt(0) == 0);
    CHECK(f.sqrt(1) == 1);
    for (uint32_t a = 0; a < 8; ++a) {
        CHECK(f.mul(f.sqrt(a), f.sqrt(a)) == a);
        CHECK(f.sqrt(f.mul(a, a)) == a);
    }
}

TEST_CASE("cube roots, odd m") {
    GF2m f(3);
    CHECK(f.cuberoot(0) == 0);
    CHECK(f.cuberoot(1) == 1);
    for (uint32_t a = 0; a < 8; ++a) CHECK(f.pow(f.cuberoot(a), 3) == a);
    GF2m f4(4);
    CHECK_THROWS_AS(f4.cuberoot(3), std::invalid_argument);
}
