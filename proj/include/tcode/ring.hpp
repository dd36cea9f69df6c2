#pragma once
// The chain ring R_m = F_{2^m} + u F_{2^m} with u^2 = 0: arithmetic,
// Frobenius, the trace down to the base ring R = F_2 + u F_2, the Gray
// map on R and the Lee weight.

#include "tcode/gf2m.hpp"

#include <cstdint>
#include <vector>

namespace tcode {

// Base ring R = {0, 1, u, 1+u} as 2-bit codes: bit 0 is the F_2 part,
// bit 1 the u-coefficient. Addition is XOR of codes.
using BaseR = uint8_t;
inline constexpr BaseR kR0 = 0, kR1 = 1, kRu = 2, kR1u = 3;

inline BaseR br_add(BaseR x, BaseR y) { return x ^ y; }

// (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + a2 b1) u over GF(2).
inline BaseR br_mul(BaseR x, BaseR y) {
    unsigned a1 = x & 1, b1 = x >> 1, a2 = y & 1, b2 = y >> 1;
    return BaseR((a1 & a2) | (((a1 & b2) ^ (a2 & b1)) << 1));
}

// Gray map a + b u -> (b, a + b).
inline unsigned br_gray_first(BaseR x) { return (x >> 1) & 1; }
inline unsigned br_gray_second(BaseR x) { return (x ^ (x >> 1)) & 1; }

// Lee weight = Hamming weight of the Gray image: 0,1,u,1+u -> 0,1,2,1.
inline unsigned br_lee(BaseR x) {
    return br_gray_first(x) + br_gray_second(x);
}

const char* br_name(BaseR x);  // "0", "1", "u", "1+u"

struct RElem {
    uint32_t alpha = 0;  // F_{2^m} part
    uint32_t beta = 0;   // u-coefficient
    bool operator==(const RElem&) const = default;
};

class RingR {
  public:
    explicit RingR(GF2m f) : f_(f) {}

    const GF2m& field() const { return f_; }
    unsigned m() const { return f_.m(); }
    uint64_t unit_count() const { return (uint64_t(f_.order()) - 1) << f_.m(); }

    bool is_zero(RElem x) const { return x.alpha == 0 && x.beta == 0; }
    bool is_unit(RElem x) const { return x.alpha != 0; }
    bool is_nilpotent(RElem x) const { return x.alpha == 0; }  // the ideal (u)

    RElem add(RElem x, RElem y) const { return {x.alpha ^ y.alpha, x.beta ^ y.beta}; }

    RElem mul(RElem x, RElem y) const {
        return {f_.mul(x.alpha, y.alpha),
                f_.add(f_.mul(x.alpha, y.beta), f_.mul(y.alpha, x.beta))};
    }

    // (a + b u)^-1 = a^-1 + a^-2 b u in characteristic 2.
    RElem inv(RElem x) const {
        if (!is_unit(x)) throw std::invalid_argument("inverse of a non-unit");
        uint32_t ai = f_.inv(x.alpha);
        return {ai, f_.mul(f_.mul(ai, ai), x.beta)};
    }

    RElem frobenius(RElem x) const {
        return {f_.mul(x.alpha, x.alpha), f_.mul(x.beta, x.beta)};
    }

    // x^3 = a^3 + a^2 b u (the cross terms collapse since u^2 = 0).
    RElem cube(RElem x) const {
        uint32_t a2 = f_.mul(x.alpha, x.alpha);
        return {f_.mul(a2, x.alpha), f_.mul(a2, x.beta)};
    }

    // Trace down to R; closed form tr(alpha) + tr(beta) u.
    BaseR trace(RElem x) const {
        return BaseR(f_.tr(x.alpha) | (f_.tr(x.beta) << 1));
    }

    RElem embed(BaseR c) const { return {uint32_t(c & 1), uint32_t(c >> 1)}; }

    // All units alpha + beta u, alpha != 0, ordered lexicographically by
    // (integer(alpha), integer(beta)). This order indexes codeword
    // coordinates everywhere.
    std::vector<RElem> enumerate_units() const;

  private:
    GF2m f_;
};

}  // namespace tcode
