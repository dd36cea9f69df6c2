#pragma once
// Bit-packed GF(2) vectors and small Gaussian-elimination helpers.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcode {

struct BitVec {
    size_t nbits = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(size_t n) : nbits(n), w((n + 63) / 64, 0) {}

    bool get(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void flip(size_t i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }

    void and_with(const BitVec& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }

    uint64_t weight() const {
        uint64_t c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }

    bool is_zero() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }

    // support(y) subseteq support(*this), i.e. (y & ~x) == 0 wordwise.
    bool covers(const BitVec& y) const {
        if (nbits != y.nbits) throw std::invalid_argument("covers: length mismatch");
        for (size_t i = 0; i < w.size(); ++i)
            if (y.w[i] & ~w[i]) return false;
        return true;
    }

    bool operator==(const BitVec& o) const { return nbits == o.nbits && w == o.w; }

    // Little-endian nibble dump: hex digit i holds bits 4i..4i+3.
    std::string to_hex() const {
        static const char digits[] = "0123456789abcdef";
        std::string s;
        s.reserve((nbits + 3) / 4);
        for (size_t i = 0; i < (nbits + 3) / 4; ++i)
            s += digits[(w[i / 16] >> (4 * (i % 16))) & 0xf];
        return s;
    }
};

// Rank over GF(2); rows are consumed by value.
inline uint64_t gf2_rank(std::vector<BitVec> rows) {
    uint64_t rank = 0;
    size_t nw = rows.empty() ? 0 : rows[0].w.size();
    for (size_t word = 0, bit = 0; word < nw; bit = (bit + 1) & 63, word += (bit == 0)) {
        uint64_t mask = uint64_t(1) << bit;
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot].w[word] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r].w[word] & mask)) rows[r].xor_with(rows[rank]);
        if (++rank == rows.size()) break;
    }
    return rank;
}

}  // namespace tcode
