#pragma once
// Minimal-codeword analysis of a binary code given by generator rows,
// the Ashikhmin-Barg sufficient condition, and the Massey secret
// sharing scheme: the secret sits at coordinate 1, users 2..n hold the
// remaining coordinates, and the minimal coalitions are the supports of
// minimal codewords that are nonzero at coordinate 1.

#include "tcode/bits.hpp"
#include "tcode/code.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace tcode {

// All 2^k codewords spanned by the rows, in Gray-code combination order.
std::vector<BitVec> span_codewords(const std::vector<BitVec>& rows);

struct ABResult {
    bool holds = false;
    uint64_t w_min = 0;
    uint64_t w_max = 0;
};

// w_min / w_max > (q-1)/q guarantees every nonzero codeword is minimal
// (sufficient, never necessary). Evaluated exactly as q w_min > (q-1) w_max.
ABResult ab_condition(const WeightDistribution& dist, unsigned q = 2);

struct MinimalityReport {
    uint64_t nonzero_words = 0;
    uint64_t minimal_words = 0;
    bool all_minimal = false;
    std::map<uint64_t, uint64_t> minimal_by_weight;
};

// Brute force: a nonzero codeword is minimal iff it covers no other
// nonzero codeword; only words of strictly smaller weight can be
// covered, so each word is compared against the lighter ones.
MinimalityReport minimal_codewords(const std::vector<BitVec>& rows, unsigned threads = 1);

struct AccessStructure {
    uint64_t users = 0;                // n_bin - 1
    uint32_t secret_coordinate = 1;    // 1-based
    bool degenerate = false;           // coordinate 1 identically zero
    std::vector<std::vector<uint32_t>> minimal_access_sets;  // sorted 1-based users
    std::vector<uint32_t> dictators;   // users in every minimal access set
};

// Full structure by enumeration; guarded like minimal_codewords.
AccessStructure massey_access_structure(const std::vector<BitVec>& rows,
                                        unsigned threads = 1);

struct AccessSummary {
    uint64_t users = 0;
    bool degenerate = false;
    mpz_class minimal_access_sets = 0;
    std::vector<uint32_t> dictators;
};

// Streaming variant for codes whose nonzero words are all minimal
// (e.g. certified by ab_condition): counts the access sets and
// intersects their supports without materializing them.
AccessSummary massey_summary_all_minimal(const std::vector<BitVec>& rows);

// A uniformly random codeword with coordinate 1 equal to the secret;
// deterministic in the seed. Shares are coordinates 2..n_bin.
BitVec deal_shares(unsigned secret, uint64_t seed, const std::vector<BitVec>& rows);

// Recover the secret from shares held by the given users (1-based
// coordinates, share_bits aligned with users): finds a GF(2)
// combination of the code's columns over {1} u users expressing column
// 1, by elimination against the generator rows. Throws if the set is
// not qualified.
unsigned reconstruct(const std::vector<uint32_t>& users,
                     const std::vector<uint8_t>& share_bits,
                     const std::vector<BitVec>& rows);

// Qualified = the users' columns span column 1.
bool is_qualified(const std::vector<uint32_t>& users, const std::vector<BitVec>& rows);

}  // namespace tcode
