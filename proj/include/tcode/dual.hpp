#pragma once
// Low-Lee-weight search on the R-dual of C_m by bounded-support pattern
// enumeration, the trace nondegeneracy check, and the exact binary
// MacWilliams transform used as an independent consistency oracle.

#include "tcode/code.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tcode {

// A sparse word over the base ring: strictly increasing coordinate
// indices (into the canonical unit order) with nonzero values.
struct DualPattern {
    std::vector<std::pair<uint32_t, BaseR>> entries;

    unsigned lee_weight() const {
        unsigned w = 0;
        for (const auto& [idx, v] : entries) w += br_lee(v);
        return w;
    }
};

// Canonical name of the value multiset, e.g. "1,1+u" or "u,u".
std::string pattern_type(const DualPattern& p);

// All value multisets with total Lee weight <= max_lee, in canonical
// name order (used to report explicit zero counts).
std::vector<std::string> pattern_types_up_to(unsigned max_lee);

// Orthogonality over R against the 2m module generators Ev(x^j, 0) and
// Ev(0, x^j): these generate C_m as an R-module, since {x^j} is a free
// R-module basis of R_m.
bool is_dual_word(const Code& code, const DualPattern& p);

struct DualSearchResult {
    unsigned max_lee = 0;
    std::array<uint64_t, 5> count_by_weight{};  // index 1..max_lee used
    std::map<std::string, uint64_t> count_by_type;
    std::vector<DualPattern> witnesses;  // a few per type, deterministic
};

// Exhaustive enumeration of all supports of size <= max_lee with value
// assignments from {1, u, 1+u} of total Lee weight <= max_lee, filtered
// by orthogonality. Workers split the first support coordinate; merges
// are in coordinate order, so results do not depend on thread count.
DualSearchResult search_low_weight_duals(const Code& code, unsigned max_lee,
                                         unsigned threads = 1);

// Smallest w >= 1 with a dual word of Lee weight w, or 0 if none found
// up to max_lee.
unsigned dual_distance(const Code& code, unsigned max_lee, unsigned threads = 1);

// True iff for every nonzero x in R_m some pair (a,b) has
// Tr(ax + bx^3) != 0; direct double loop with early exit.
bool nondegeneracy_check(const Code& code);

// Exact Hamming weight distribution of the dual of a binary [n,k] code
// from the code's own distribution, via Krawtchouk sums in
// arbitrary-precision integers. Throws if the input does not sum to
// 2^k or if any output coefficient is negative or non-integral.
WeightDistribution macwilliams_binary(const WeightDistribution& dist, uint64_t n_bin,
                                      uint64_t k_bin);

}  // namespace tcode
