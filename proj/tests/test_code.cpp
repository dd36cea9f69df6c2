#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcode/code.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

using namespace tcode;

namespace {

// Frozen m=3 distribution, derived by hand from the case analysis:
// IV1 splits (21, 21, 7) over {32, 64, 96} by the cubic-sum sign count,
// IV4 splits evenly (1568 each) over {48, 64}, the six one-sided cases
// contribute 896 at weight 56 and 14 at 64. Cross-checked against the
// first power moment 2^{11} * 112 = 229376.
const WeightDistribution kDistM3 = {
    {0, 1}, {32, 21}, {48, 1568}, {56, 896}, {64, 1603}, {96, 7},
};

WeightDistribution direct_distribution(const Code& code) {
    const GF2m& f = code.field();
    const uint32_t q = f.order();
    WeightDistribution dist;
    for (uint32_t am = 0; am < q * q; ++am)
        for (uint32_t bm = 0; bm < q * q; ++bm) {
            const RElem a{am % q, am / q}, b{bm % q, bm / q};
            dist[code.gray_image(code.ev(a, b)).weight()] += 1;
        }
    return dist;
}

}  // namespace

TEST_CASE("code parameters") {
    Code c3{GF2m(3)};
    CHECK(c3.spec().n == 56);
    CHECK(c3.spec().n_bin == 112);
    CHECK(c3.spec().k_bin == 12);
    Code c5{GF2m(5)};
    CHECK(c5.spec().n == 992);
    CHECK(c5.spec().n_bin == 1984);
    CHECK(c5.spec().k_bin == 20);
}

TEST_CASE("evaluation map basics, m = 3") {
    Code code{GF2m(3)};
    const GF2m& f = code.field();

    const Codeword zero = code.ev({0, 0}, {0, 0});
    for (BaseR c : zero) CHECK(c == kR0);
    CHECK(code.gray_image(zero).nbits == 112);
    CHECK(code.gray_image(zero).weight() == 0);

    // a = beta u, b = 0: coordinate at x is tr(beta x0) u, total Lee 2^{2m}
    for (uint32_t beta = 1; beta < 8; ++beta) {
        const Codeword cw = code.ev({0, beta}, {0, 0});
        uint64_t lee = 0;
        for (size_t i = 0; i < cw.size(); ++i) {
            const BaseR expect = f.tr(f.mul(beta, code.units()[i].alpha)) ? kRu : kR0;
            CHECK(cw[i] == expect);
            lee += br_lee(cw[i]);
        }
        CHECK(lee == 64);
    }

    // any unit a, b = 0: Lee weight (2^m - 1) 2^m
    CHECK(code.gray_image(code.ev({1, 0}, {0, 0})).weight() == 56);
}

TEST_CASE("gray image weight equals the Lee weight, all pairs m = 3") {
    Code code{GF2m(3)};
    for (uint32_t am = 0; am < 64; ++am)
        for (uint32_t bm = 0; bm < 64; ++bm) {
            const RElem a{am % 8, am / 8}, b{bm % 8, bm / 8};
            const Codeword cw = code.ev(a, b);
            uint64_t lee = 0;
            for (BaseR c : cw) lee += br_lee(c);
            CHECK(code.gray_image(cw).weight() == lee);
        }
}

TEST_CASE("generator rows span the Gray image") {
    Code c3{GF2m(3)};
    CHECK(c3.generator_rows().size() == 12);
    for (const BitVec& r : c3.generator_rows()) CHECK(r.nbits == 112);
    CHECK(gf2_rank(c3.generator_rows()) == 12);

    Code c5{GF2m(5)};
    CHECK(c5.generator_rows().size() == 20);
    CHECK(c5.generator_rows()[0].nbits == 1984);
    CHECK(gf2_rank(c5.generator_rows()) == 20);

    // row-combination mask g reproduces ev(a(g), b(g))
    const auto& rows = c3.generator_rows();
    for (uint64_t g : {uint64_t(1), uint64_t(0x123), uint64_t(0xfff), uint64_t(0x842)}) {
        BitVec acc(112);
        for (unsigned j = 0; j < 12; ++j)
            if (g >> j & 1) acc.xor_with(rows[j]);
        CHECK((acc == c3.gray_image(c3.ev(c3.pair_a_of_mask(g), c3.pair_b_of_mask(g)))));
    }
}

TEST_CASE("enumerated distribution m = 3") {
    Code code{GF2m(3)};
    const WeightDistribution dist = code.enumerate_weights(1);
    CHECK((dist == kDistM3));

    mpz_class total = 0;
    for (const auto& [w, c] : dist) total += c;
    CHECK(total == 4096);
    CHECK(dist.at(0) == 1);

    // minimum distance from the distribution
    uint64_t dmin = 0;
    for (const auto& [w, c] : dist)
        if (w) {
            dmin = w;
            break;
        }
    CHECK(dmin == 32);
}

TEST_CASE("enumerated weight set is the union of the per-label predictions") {
    for (unsigned m : {3u, 5u}) {
        Code code{GF2m(m)};
        std::set<uint64_t> predicted;
        for (unsigned L = 0; L < kNumCaseLabels; ++L)
            for (uint64_t w : predicted_weights(CaseLabel(L), m)) predicted.insert(w);
        std::set<uint64_t> enumerated;
        for (const auto& [w, c] : code.enumerate_weights(4)) enumerated.insert(w);
        CHECK((enumerated == predicted));
    }
}

TEST_CASE("gray-code enumeration agrees with direct evaluation, m = 3") {
    Code code{GF2m(3)};
    CHECK((code.enumerate_weights(1) == direct_distribution(code)));
    CHECK((code.enumerate_weights(3) == code.enumerate_weights(1)));
}

TEST_CASE("even m enumerates as an exploration tool") {
    Code code{GF2m(2)};
    const WeightDistribution dist = code.enumerate_weights(1);
    CHECK((dist == direct_distribution(code)));
    mpz_class total = 0;
    for (const auto& [w, c] : dist) total += c;
    CHECK(total == 256);

    // Ev is not injective here: Ev(0, u) vanishes because x^3 = 1 + x0^2 x1 u
    // on units and tr(1) = 0 for even m.
    const Codeword cw = code.ev({0, 0}, {0, 1});
    for (BaseR c : cw) CHECK(c == kR0);
    CHECK(dist.at(0) > 1);
}

TEST_CASE("case classification") {
    RingR ring{GF2m(3)};
    CHECK(classify(ring, {0, 0}, {0, 0}) == CaseLabel::I);
    CHECK(classify(ring, {0, 1}, {0, 0}) == CaseLabel::II1);
    CHECK(classify(ring, {1, 0}, {0, 0}) == CaseLabel::II2);
    CHECK(classify(ring, {0, 0}, {0, 3}) == CaseLabel::III1);
    CHECK(classify(ring, {0, 0}, {5, 1}) == CaseLabel::III2);
    CHECK(classify(ring, {0, 2}, {0, 3}) == CaseLabel::IV1);
    CHECK(classify(ring, {0, 2}, {3, 0}) == CaseLabel::IV2);
    CHECK(classify(ring, {2, 2}, {0, 3}) == CaseLabel::IV3);
    CHECK(classify(ring, {2, 0}, {3, 3}) == CaseLabel::IV4);
}

TEST_CASE("per-label pair counts, m = 3") {
    Code code{GF2m(3)};
    const CaseWeightReport rep = code.verify_case_weights(1);
    // |{0}| = 1, |M\0| = 7, |units| = 56 per side
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::I)] == 1);
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::II1)] == 7);
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::II2)] == 56);
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::III1)] == 7);
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::III2)] == 56);
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::IV1)] == 49);
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::IV2)] == 392);
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::IV3)] == 392);
    CHECK(rep.pairs_per_label[unsigned(CaseLabel::IV4)] == 3136);
}

TEST_CASE("predicted weights") {
    CHECK(predicted_weights(CaseLabel::I, 3) == std::vector<uint64_t>{0});
    CHECK(predicted_weights(CaseLabel::II1, 3) == std::vector<uint64_t>{64});
    CHECK((predicted_weights(CaseLabel::IV1, 3) == std::vector<uint64_t>{32, 64, 96}));
    CHECK((predicted_weights(CaseLabel::IV4, 3) == std::vector<uint64_t>{48, 64}));
    CHECK(predicted_weights(CaseLabel::II2, 5) == std::vector<uint64_t>{992});
    CHECK_THROWS_AS(predicted_weights(CaseLabel::IV1, 4), std::invalid_argument);
}

TEST_CASE("cubic character sum") {
    Code code{GF2m(3)};
    CHECK(code.charsum_cubic(0, 0) == 8);  // all terms +1
    for (uint32_t b1 = 1; b1 < 8; ++b1) CHECK(code.charsum_cubic(b1, 0) == 0);
    for (uint32_t b1 = 1; b1 < 8; ++b1)
        for (uint32_t b2 = 1; b2 < 8; ++b2) {
            const int64_t a = code.charsum_cubic(b1, b2);
            CHECK((a == 0 || a == 4 || a == -4));
        }

    Code c5{GF2m(5)};
    for (uint32_t b1 = 1; b1 < 32; ++b1)
        for (uint32_t b2 = 1; b2 < 32; ++b2) {
            const int64_t a = c5.charsum_cubic(b1, b2);
            CHECK((a == 0 || a == 8 || a == -8));
        }
}

TEST_CASE("double character sum, m = 3 exhaustive") {
    Code code{GF2m(3)};
    const GF2m& f = code.field();
    CHECK_THROWS_AS(code.charsum_double(0, 1, 1, 1), std::invalid_argument);
    CHECK(code.charsum_double(1, 0, 1, 0) == 8);

    for (uint32_t a1 = 1; a1 < 8; ++a1)
        for (uint32_t b1 = 0; b1 < 8; ++b1)
            for (uint32_t a2 = 1; a2 < 8; ++a2)
                for (uint32_t b2 = 0; b2 < 8; ++b2) {
                    const int64_t B = code.charsum_double(a1, b1, a2, b2);
                    // the inner sum collapses onto x0 = sqrt(a1/a2)
                    const uint32_t x0 = f.sqrt(f.mul(a1, f.inv(a2)));
                    const uint32_t x03 = f.mul(f.mul(x0, x0), x0);
                    const int sign = f.tr(f.add(f.mul(b1, x0), f.mul(b2, x03))) ? -1 : 1;
                    CHECK(B == 8 * sign);

                    // the companion sum with the extra phase
                    // tr(a1 x0 + a2 x0^3) is identical: the phase vanishes
                    // at the only surviving x0
                    int64_t B2 = 0;
                    for (uint32_t y0 = 1; y0 < 8; ++y0) {
                        const uint32_t y03 = f.mul(f.mul(y0, y0), y0);
                        const unsigned e0 =
                            f.tr(f.add(f.mul(a1, y0), f.mul(a2, y03))) ^
                            f.tr(f.add(f.mul(b1, y0), f.mul(b2, y03)));
                        const uint32_t coeff = f.add(a1, f.mul(a2, f.mul(y0, y0)));
                        for (uint32_t y1 = 0; y1 < 8; ++y1)
                            B2 += (e0 ^ f.tr(f.mul(coeff, y1))) ? -1 : 1;
                    }
                    CHECK(B2 == B);
                }
}

TEST_CASE("case-weight verification, m = 3") {
    Code code{GF2m(3)};
    const CaseWeightReport rep = code.verify_case_weights(2);
    CHECK(rep.pairs_checked == 4096);
    CHECK(rep.membership_violations == 0);
    CHECK(rep.iv1_formula_violations == 0);
    CHECK(rep.iv1_at_minus == 21);
    CHECK(rep.iv1_at_mid == 21);
    CHECK(rep.iv1_at_plus == 7);
    CHECK(rep.ok());
    CHECK(rep.observed[unsigned(CaseLabel::I)].at(0) == 1);
}

TEST_CASE("even m is rejected by the case-weight verification") {
    Code code{GF2m(2)};
    CHECK_THROWS_AS(code.verify_case_weights(1), std::invalid_argument);
}

TEST_CASE("coordinate permutation substitution identity") {
    Code code{GF2m(3)};
    const PermInvReport rep = code.permutation_invariance_check(100, 42);
    CHECK(rep.trials == 100);
    CHECK(rep.passes == 100);

    // g = 1 is the identity permutation
    const RingR& ring = code.ring();
    for (size_t i = 0; i < code.units().size(); ++i)
        CHECK(code.unit_index(ring.mul({1, 0}, code.units()[i])) == i);

    // regularity: x -> (u'/v') x maps coordinate v' to u'
    for (const RElem v : {RElem{1, 0}, RElem{3, 5}, RElem{7, 7}})
        for (const RElem u : {RElem{2, 1}, RElem{1, 6}}) {
            const RElem g = ring.mul(u, ring.inv(v));
            CHECK(code.unit_index(ring.mul(g, v)) == code.unit_index(u));
        }
}

TEST_CASE("distribution cache round trip") {
    Code code{GF2m(3)};
    const CodeSpec spec = code.spec();
    const WeightDistribution dist = code.enumerate_weights(1);
    const std::string path =
        (std::filesystem::temp_directory_path() / distribution_cache_name(spec)).string();
    save_distribution(path, spec, dist);

    WeightDistribution loaded;
    REQUIRE(load_distribution(path, spec, loaded));
    CHECK((loaded == dist));

    // cache files are byte-stable
    save_distribution(path + ".2", spec, dist);
    std::ifstream f1(path, std::ios::binary), f2(path + ".2", std::ios::binary);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK(!s1.empty());

    // a different key must not load
    CodeSpec other = spec;
    other.poly = 13;
    WeightDistribution d2;
    CHECK(!load_distribution(path, other, d2));
    std::filesystem::remove(path);
    std::filesystem::remove(path + ".2");
}

TEST_CASE("feasibility guard") {
    // 4m = 44 > 40 for m = 11
    Code code{GF2m(11)};
    CHECK_THROWS_AS(code.enumerate_weights(1), feasibility_error);
}
