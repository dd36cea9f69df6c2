#pragma once
// GF(2^m) arithmetic in polynomial basis, 2 <= m <= 20.
// Field elements are plain bitmasks: bit j holds the coefficient of x^j,
// so every value is < 2^m. The canonical total order on elements is the
// integer order of these bitmasks.

#include <cstdint>
#include <stdexcept>

namespace tcode {

// Smallest (as integer bitmask) irreducible polynomial of degree m.
uint32_t default_reduction_poly(unsigned m);

// Irreducibility by trial division against every polynomial of degree
// 1..m/2. poly must have degree exactly m.
bool poly_is_irreducible(uint32_t poly, unsigned m);

class GF2m {
  public:
    explicit GF2m(unsigned m);
    GF2m(unsigned m, uint32_t reduction_poly);

    unsigned m() const { return m_; }
    uint32_t reduction_poly() const { return poly_; }
    uint32_t order() const { return uint32_t(1) << m_; }      // 2^m
    uint32_t max_elem() const { return order() - 1; }          // 2^m - 1

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;  // pow(0,0) = 1
    uint32_t inv(uint32_t a) const;              // throws on a = 0
    uint32_t sqrt(uint32_t a) const;             // inverse of squaring
    uint32_t cuberoot(uint32_t a) const;         // odd m only

    // Absolute trace to GF(2). Linear, so tr(a) is the parity of a
    // masked by the traces of the basis monomials.
    unsigned tr(uint32_t a) const {
        return __builtin_parity(a & tr_mask_);
    }

  private:
    unsigned m_;
    uint32_t poly_;
    uint32_t tr_mask_;  // bit j = tr(x^j)
};

}  // namespace tcode
