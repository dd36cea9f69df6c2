#include "tcode/ring.hpp"

namespace tcode {

const char* br_name(BaseR x) {
    switch (x & 3) {
        case kR0: return "0";
        case kR1: return "1";
        case kRu: return "u";
        default: return "1+u";
    }
}

std::vector<RElem> RingR::enumerate_units() const {
    std::vector<RElem> units;
    units.reserve(unit_count());
    uint32_t q = f_.order();
    for (uint32_t a = 1; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b) units.push_back({a, b});
    return units;
}

}  // namespace tcode
