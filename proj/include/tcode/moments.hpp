#pragma once
// Exact power sums of a weight distribution, the five-equation moment
// system parameterized by the dual weight-2 and weight-4 counts, its
// exact rational solution, and the Griesmer bound utility. All
// arithmetic is arbitrary-precision; no floating point.

#include "tcode/code.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>

namespace tcode {

// Sum over nonzero weights w of w^r * A_w, for r = 0..4.
mpz_class power_sum(const WeightDistribution& dist, unsigned r);

// The five nonzero Lee weights w1 < ... < w5 for odd m >= 3:
// 2^{2m}-2^{(3m+1)/2}, 2^m(2^m-2), 2^m(2^m-1), 2^{2m}, 2^{2m}+2^{(3m+1)/2}.
std::array<uint64_t, 5> five_weight_values(unsigned m);

// Right-hand sides of the moment system for binary length
// n = 2^{m+1}(2^m - 1) and dimension 4m, parameterized by the dual
// counts a2d and a4d:
//   sum A            = 2^{4m} - 1
//   sum w A          = 2^{4m-1} n
//   sum w^2 A        = 2^{4m-2} (n(n+1) + 2 a2d)
//   sum w^3 A        = 2^{4m-3} (n^2(n+3) + 6 n a2d)
//   sum w^4 A        = 2^{4m-4} (n(n+1)(n^2+5n-2) + 4(3n^2+3n-4) a2d + 24 a4d)
std::array<mpz_class, 5> moment_rhs(unsigned m, const mpz_class& a2d, const mpz_class& a4d);

// Signed residuals (enumerated left side minus closed-form right side).
std::array<mpz_class, 5> moment_residuals(const WeightDistribution& dist,
                                          const mpz_class& a2d, const mpz_class& a4d,
                                          unsigned m);

struct MomentSolveResult {
    std::array<mpq_class, 5> solution;
    std::array<bool, 5> integral{};
    std::array<bool, 5> nonnegative{};
    bool all_integral() const {
        for (bool b : integral)
            if (!b) return false;
        return true;
    }
};

// Unique exact rational solution of the 5x5 system with the given right
// sides (the weight matrix is Vandermonde in the five distinct weights).
MomentSolveResult solve_given_rhs(unsigned m, const std::array<mpz_class, 5>& rhs);

// Solve the system with the closed-form right sides above.
MomentSolveResult solve_moment_system(unsigned m, const mpz_class& a2d,
                                      const mpz_class& a4d);

struct MomentRoundtrip {
    bool ok = false;
    std::array<mpq_class, 5> solved;
};

// Rebuild the right sides from the distribution's own power sums, solve,
// and compare with the enumerated frequencies at the five weights. Holds
// exactly whenever the nonzero support is contained in the five weights.
MomentRoundtrip moment_roundtrip(const WeightDistribution& dist, unsigned m);

struct GriesmerResult {
    uint64_t bound = 0;
    bool satisfied = false;
};

// Binary Griesmer bound: n >= sum_{i<k} ceil(d / 2^i).
GriesmerResult griesmer_check(uint64_t n, uint64_t k, uint64_t d);

}  // namespace tcode
