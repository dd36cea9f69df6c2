#include "tcode/moments.hpp"

namespace tcode {

mpz_class power_sum(const WeightDistribution& dist, unsigned r) {
    if (r > 4) throw std::invalid_argument("power sums supported for r <= 4 only");
    mpz_class s = 0;
    for (const auto& [w, c] : dist) {
        if (w == 0) continue;
        mpz_class term = c;
        for (unsigned i = 0; i < r; ++i) term *= static_cast<unsigned long>(w);
        s += term;
    }
    return s;
}

std::array<uint64_t, 5> five_weight_values(unsigned m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("the five-weight ladder needs odd m >= 3");
    const uint64_t sq = uint64_t(1) << (2 * m);
    const uint64_t gap = uint64_t(1) << ((3 * m + 1) / 2);
    const uint64_t pm = uint64_t(1) << m;
    return {sq - gap, pm * (pm - 2), pm * (pm - 1), sq, sq + gap};
}

std::array<mpz_class, 5> moment_rhs(unsigned m, const mpz_class& a2d,
                                    const mpz_class& a4d) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("moment system needs odd m >= 3");
    const mpz_class n = (mpz_class(1) << (m + 1)) * ((mpz_class(1) << m) - 1);
    std::array<mpz_class, 5> rhs;
    rhs[0] = (mpz_class(1) << (4 * m)) - 1;
    rhs[1] = (mpz_class(1) << (4 * m - 1)) * n;
    rhs[2] = (mpz_class(1) << (4 * m - 2)) * (n * (n + 1) + 2 * a2d);
    rhs[3] = (mpz_class(1) << (4 * m - 3)) * (n * n * (n + 3) + 6 * n * a2d);
    rhs[4] = (mpz_class(1) << (4 * m - 4)) *
             (n * (n + 1) * (n * n + 5 * n - 2) + 4 * (3 * n * n + 3 * n - 4) * a2d +
              24 * a4d);
    return rhs;
}

std::array<mpz_class, 5> moment_residuals(const WeightDistribution& dist,
                                          const mpz_class& a2d, const mpz_class& a4d,
                                          unsigned m) {
    const std::array<mpz_class, 5> rhs = moment_rhs(m, a2d, a4d);
    std::array<mpz_class, 5> res;
    for (unsigned r = 0; r < 5; ++r) res[r] = power_sum(dist, r) - rhs[r];
    return res;
}

MomentSolveResult solve_given_rhs(unsigned m, const std::array<mpz_class, 5>& rhs) {
    const std::array<uint64_t, 5> w = five_weight_values(m);

    // Gaussian elimination on the 5x5 Vandermonde system, exact rationals.
    mpq_class a[5][6];
    for (unsigned r = 0; r < 5; ++r) {
        for (unsigned i = 0; i < 5; ++i) {
            mpz_class p = 1;
            for (unsigned t = 0; t < r; ++t) p *= static_cast<unsigned long>(w[i]);
            a[r][i] = p;
        }
        a[r][5] = rhs[r];
    }
    for (unsigned col = 0; col < 5; ++col) {
        unsigned pivot = col;
        while (pivot < 5 && a[pivot][col] == 0) ++pivot;
        if (pivot == 5) throw std::runtime_error("singular moment system");
        if (pivot != col)
            for (unsigned j = 0; j < 6; ++j) std::swap(a[pivot][j], a[col][j]);
        const mpq_class inv = 1 / a[col][col];
        for (unsigned j = col; j < 6; ++j) a[col][j] *= inv;
        for (unsigned r = 0; r < 5; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (unsigned j = col; j < 6; ++j) a[r][j] -= f * a[col][j];
        }
    }

    MomentSolveResult out;
    for (unsigned i = 0; i < 5; ++i) {
        out.solution[i] = a[i][5];
        out.solution[i].canonicalize();
        out.integral[i] = out.solution[i].get_den() == 1;
        out.nonnegative[i] = out.solution[i] >= 0;
    }
    return out;
}

MomentSolveResult solve_moment_system(unsigned m, const mpz_class& a2d,
                                      const mpz_class& a4d) {
    return solve_given_rhs(m, moment_rhs(m, a2d, a4d));
}

MomentRoundtrip moment_roundtrip(const WeightDistribution& dist, unsigned m) {
    std::array<mpz_class, 5> rhs;
    for (unsigned r = 0; r < 5; ++r) rhs[r] = power_sum(dist, r);
    const MomentSolveResult sol = solve_given_rhs(m, rhs);
    const std::array<uint64_t, 5> w = five_weight_values(m);
    MomentRoundtrip rt;
    rt.solved = sol.solution;
    rt.ok = true;
    for (unsigned i = 0; i < 5; ++i) {
        auto it = dist.find(w[i]);
        const mpz_class expect = (it == dist.end()) ? mpz_class(0) : it->second;
        if (sol.solution[i] != mpq_class(expect)) rt.ok = false;
    }
    return rt;
}

GriesmerResult griesmer_check(uint64_t n, uint64_t k, uint64_t d) {
    if (k < 1) throw std::invalid_argument("dimension must be >= 1");
    GriesmerResult g;
    uint64_t div = 1;
    for (uint64_t i = 0; i < k; ++i) {
        g.bound += (d + div - 1) / div;
        if (div <= (uint64_t(1) << 62)) div <<= 1;
    }
    g.satisfied = n >= g.bound;
    return g;
}

}  // namespace tcode
