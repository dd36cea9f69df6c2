#pragma once
// The trace code C_m = { Ev(a,b) : a,b in R_m } with
// Ev(a,b) = (Tr(ax + bx^3))_{x unit}, its Gray image, the exact Lee
// weight distribution by Gray-code-ordered enumeration, the nine-case
// classification of (a,b) with predicted weights, and the two
// exponential sums behind the case analysis.

#include "tcode/bits.hpp"
#include "tcode/ring.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace tcode {

struct feasibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeSpec {
    unsigned m = 0;
    uint32_t poly = 0;
    uint64_t n = 0;      // length over R, = (2^m - 1) 2^m
    uint64_t n_bin = 0;  // binary length 2n
    uint64_t k_bin = 0;  // nominal binary dimension 4m
};

// Case labels partitioning R_m x R_m by membership of a and b in
// {0} / (u)\{0} / units.
enum class CaseLabel { I, II1, II2, III1, III2, IV1, IV2, IV3, IV4 };
inline constexpr unsigned kNumCaseLabels = 9;
const char* to_string(CaseLabel);

using Codeword = std::vector<BaseR>;

// weight -> number of (a,b) pairs attaining it; sums to 2^{4m}.
using WeightDistribution = std::map<uint64_t, mpz_class>;

struct CaseWeightReport {
    uint64_t pairs_checked = 0;
    uint64_t membership_violations = 0;
    uint64_t iv1_formula_violations = 0;
    std::array<uint64_t, kNumCaseLabels> pairs_per_label{};
    // Observed weight -> pair count, per label (at most a handful of keys).
    std::array<std::map<uint64_t, uint64_t>, kNumCaseLabels> observed{};
    // Case IV1 split across its three admissible weights.
    uint64_t iv1_at_minus = 0, iv1_at_mid = 0, iv1_at_plus = 0;
    std::vector<std::string> sample_violations;  // capped
    bool ok() const { return membership_violations == 0 && iv1_formula_violations == 0; }
};

struct PermInvReport {
    unsigned trials = 0;
    unsigned passes = 0;
    bool ok() const { return passes == trials; }
};

class Code {
  public:
    explicit Code(GF2m f);

    const RingR& ring() const { return ring_; }
    const GF2m& field() const { return ring_.field(); }
    CodeSpec spec() const;

    const std::vector<RElem>& units() const { return units_; }
    size_t unit_index(RElem x) const;  // throws if x is not a unit

    Codeword ev(RElem a, RElem b) const;

    // Concatenated-halves Gray image: (u-parts | F_2-parts + u-parts).
    // Its Hamming weight equals the Lee weight of the codeword.
    BitVec gray_image(const Codeword& c) const;

    // 4m GF(2)-spanning rows: Gray images of Ev(x^j, 0), Ev(x^j u, 0),
    // Ev(0, x^j), Ev(0, x^j u) for j = 0..m-1, in that order. A row
    // combination with index mask g corresponds to the pair
    //   a = (g & M) + ((g >> m) & M) u,  b = (g >> 2m & M) + (g >> 3m & M) u
    // where M = 2^m - 1. Built on first use.
    const std::vector<BitVec>& generator_rows() const;

    RElem pair_a_of_mask(uint64_t g) const;
    RElem pair_b_of_mask(uint64_t g) const;

    // Exact Lee weight distribution over all 2^{4m} pairs (a,b), by
    // Gray-code-ordered accumulation: consecutive row combinations
    // differ in one row, so each step is one row-XOR plus a popcount
    // sweep. Workers own contiguous index ranges and private
    // histograms; the merge is a plain sum.
    WeightDistribution enumerate_weights(unsigned threads = 1) const;

    // A(b1,b2) = sum over the whole field of (-1)^{tr(b1 x + b2 x^3)}.
    int64_t charsum_cubic(uint32_t b1, uint32_t b2) const;

    // Double sum over units x0 and all x1 of
    // (-1)^{tr(b1 x0 + b2 x0^3) + tr((a1 + a2 x0^2) x1)}; requires
    // a1, a2 nonzero, and always lands on +-2^m.
    int64_t charsum_double(uint32_t a1, uint32_t b1, uint32_t a2, uint32_t b2) const;

    // Full sweep over all 2^{4m} pairs: the enumerated Lee weight must
    // lie in predicted_weights(classify(a,b), m), and in case IV1 it
    // must equal 2^{2m} - 2^m A(b1,b2) exactly. Odd m only.
    CaseWeightReport verify_case_weights(unsigned threads = 1) const;

    // Substitution identity behind the coordinate group action: the
    // permutation x -> gx applied to Ev(a,b) equals Ev(ag, bg^3).
    PermInvReport permutation_invariance_check(unsigned trials, uint64_t seed) const;

  private:
    RingR ring_;
    std::vector<RElem> units_;
    std::vector<RElem> cubes_;         // x^3 per unit
    std::vector<uint32_t> unit_idx_;   // (alpha << m) | beta -> index + 1
    mutable std::once_flag rows_once_;
    mutable std::vector<BitVec> rows_;
};

CaseLabel classify(const RingR& ring, RElem a, RElem b);

// Admissible Lee weights per label for odd m.
std::vector<uint64_t> predicted_weights(CaseLabel label, unsigned m);

// Distribution cache, one file per (m, reduction polynomial).
std::string distribution_cache_name(const CodeSpec& spec);
void save_distribution(const std::string& path, const CodeSpec& spec,
                       const WeightDistribution& dist);
bool load_distribution(const std::string& path, const CodeSpec& spec,
                       WeightDistribution& dist);

}  // namespace tcode
