#include "tcode/gf2m.hpp"

namespace tcode {

namespace {

unsigned poly_degree(uint32_t p) {
    unsigned d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

// Remainder of a modulo d, both carryless polynomials.
uint32_t poly_mod(uint64_t a, uint32_t d) {
    unsigned dd = poly_degree(d);
    for (int i = 63 - dd; i >= 0; --i)
        if (a >> (i + dd) & 1) a ^= uint64_t(d) << i;
    return uint32_t(a);
}

}  // namespace

bool poly_is_irreducible(uint32_t poly, unsigned m) {
    if (poly_degree(poly) != m) return false;
    for (uint32_t d = 2; poly_degree(d) <= m / 2; ++d)
        if (poly_mod(poly, d) == 0) return false;
    return true;
}

uint32_t default_reduction_poly(unsigned m) {
    if (m < 2 || m > 20) throw std::invalid_argument("extension degree must be in [2,20]");
    // A divisor of x would make the constant term zero, so scan odd masks.
    for (uint32_t p = (uint32_t(1) << m) | 1;; p += 2)
        if (poly_is_irreducible(p, m)) return p;
}

GF2m::GF2m(unsigned m) : GF2m(m, default_reduction_poly(m)) {}

GF2m::GF2m(unsigned m, uint32_t reduction_poly) : m_(m), poly_(reduction_poly) {
    if (m < 2 || m > 20) throw std::invalid_argument("extension degree must be in [2,20]");
    if (!poly_is_irreducible(poly_, m))
        throw std::invalid_argument("reduction polynomial is not irreducible of degree m");
    tr_mask_ = 0;
    for (unsigned j = 0; j < m_; ++j) {
        // tr(x^j) = sum of x^(j*2^i), i = 0..m-1
        uint32_t s = 0, p = uint32_t(1) << j;
        for (unsigned i = 0; i < m_; ++i) {
            s ^= p;
            p = mul(p, p);
        }
        if (s & 1)  // trace lands in GF(2), value is the constant bit
            tr_mask_ |= uint32_t(1) << j;
    }
}

uint32_t GF2m::mul(uint32_t a, uint32_t b) const {
    // Shift-and-xor carryless product, then reduce. Products stay below
    // 2^40 for m <= 20.
    uint64_t acc = 0, aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int i = 63 - int(m_); i >= 0; --i)
        if (acc >> (i + m_) & 1) acc ^= uint64_t(poly_) << i;
    return uint32_t(acc);
}

uint32_t GF2m::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t GF2m::inv(uint32_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return pow(a, (uint64_t(1) << m_) - 2);
}

uint32_t GF2m::sqrt(uint32_t a) const {
    return pow(a, uint64_t(1) << (m_ - 1));
}

uint32_t GF2m::cuberoot(uint32_t a) const {
    if (m_ % 2 == 0)
        throw std::invalid_argument("cube root needs odd m (cubing is 3-to-1 otherwise)");
    // 3e = 1 mod 2^m - 1, so e = (2(2^m - 1) + 1) / 3.
    uint64_t group = (uint64_t(1) << m_) - 1;
    return pow(a, (2 * group + 1) / 3);
}

}  // namespace tcode
