#include "tcode/dual.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace tcode {

namespace {

// The 2m R-module generators of C_m, as full codewords over the base ring.
std::vector<Codeword> module_generators(const Code& code) {
    const unsigned m = code.field().m();
    std::vector<Codeword> gens;
    gens.reserve(2 * m);
    for (unsigned j = 0; j < m; ++j) gens.push_back(code.ev({uint32_t(1) << j, 0}, {0, 0}));
    for (unsigned j = 0; j < m; ++j) gens.push_back(code.ev({0, 0}, {uint32_t(1) << j, 0}));
    return gens;
}

std::string type_name(unsigned n1, unsigned n1u, unsigned nu) {
    std::string s;
    auto append = [&s](const char* name, unsigned count) {
        for (unsigned i = 0; i < count; ++i) {
            if (!s.empty()) s += ',';
            s += name;
        }
    };
    append("1", n1);
    append("1+u", n1u);
    append("u", nu);
    return s;
}

void check_search_bounds(unsigned m, unsigned max_lee) {
    if (max_lee < 1 || max_lee > 4)
        throw std::invalid_argument("max_lee must be in 1..4");
    if (max_lee >= 3 && m > 4)
        throw feasibility_error("support enumeration with max_lee >= 3 refused for m > 4");
    if (m > 5)
        throw feasibility_error("support enumeration refused for m > 5");
}

struct RootOut {
    std::array<uint64_t, 5> cw{};
    std::map<std::string, uint64_t> types;
    std::vector<DualPattern> wit;
    std::map<std::string, unsigned> wit_per_type;
};

// DFS over supports in increasing coordinate order. syndromes[p][v-1]
// packs the 2m base-ring products (v * gen_k[p]) into 2-bit lanes, so a
// pattern is orthogonal to every generator iff its packed XOR is zero.
struct Searcher {
    const std::vector<std::array<uint64_t, 3>>& synd;
    unsigned max_lee;
    uint32_t n;
    RootOut& out;
    DualPattern cur;

    void record(unsigned lee) {
        ++out.cw[lee];
        std::string t = pattern_type(cur);
        ++out.types[t];
        if (out.wit_per_type[t] < 2) {
            ++out.wit_per_type[t];
            out.wit.push_back(cur);
        }
    }

    void dfs(uint32_t from, unsigned lee, uint64_t syndrome) {
        for (uint32_t p = from; p < n; ++p) {
            for (BaseR v = 1; v <= 3; ++v) {
                const unsigned nl = lee + br_lee(v);
                if (nl > max_lee) continue;
                const uint64_t s2 = syndrome ^ synd[p][v - 1];
                cur.entries.emplace_back(p, v);
                if (s2 == 0) record(nl);
                if (nl < max_lee) dfs(p + 1, nl, s2);
                cur.entries.pop_back();
            }
        }
    }
};

}  // namespace

std::string pattern_type(const DualPattern& p) {
    unsigned n1 = 0, n1u = 0, nu = 0;
    for (const auto& [idx, v] : p.entries) {
        if (v == kR1) ++n1;
        else if (v == kR1u) ++n1u;
        else ++nu;
    }
    return type_name(n1, n1u, nu);
}

std::vector<std::string> pattern_types_up_to(unsigned max_lee) {
    std::vector<std::string> names;
    for (unsigned n1 = 0; n1 <= max_lee; ++n1)
        for (unsigned n1u = 0; n1 + n1u <= max_lee; ++n1u)
            for (unsigned nu = 0; n1 + n1u + 2 * nu <= max_lee; ++nu)
                if (n1 + n1u + nu > 0) names.push_back(type_name(n1, n1u, nu));
    std::sort(names.begin(), names.end());
    return names;
}

bool is_dual_word(const Code& code, const DualPattern& p) {
    for (const Codeword& gen : module_generators(code)) {
        BaseR acc = kR0;
        for (const auto& [idx, v] : p.entries) acc = br_add(acc, br_mul(gen[idx], v));
        if (acc != kR0) return false;
    }
    return true;
}

DualSearchResult search_low_weight_duals(const Code& code, unsigned max_lee,
                                         unsigned threads) {
    const unsigned m = code.field().m();
    check_search_bounds(m, max_lee);

    const std::vector<Codeword> gens = module_generators(code);
    const uint32_t n = uint32_t(code.units().size());

    // 2m generators, 2 bits each: fits a word comfortably for m <= 5.
    std::vector<std::array<uint64_t, 3>> synd(n);
    for (uint32_t p = 0; p < n; ++p)
        for (BaseR v = 1; v <= 3; ++v) {
            uint64_t packed = 0;
            for (size_t k = 0; k < gens.size(); ++k)
                packed |= uint64_t(br_mul(gens[k][p], v)) << (2 * k);
            synd[p][v - 1] = packed;
        }

    if (threads < 1) threads = 1;
    if (threads > n) threads = n;
    std::vector<RootOut> roots(n);
    std::atomic<uint32_t> next_root{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const uint32_t p0 = next_root.fetch_add(1);
                if (p0 >= n) return;
                Searcher s{synd, max_lee, n, roots[p0], {}};
                for (BaseR v = 1; v <= 3; ++v) {
                    const unsigned lee = br_lee(v);
                    if (lee > max_lee) continue;
                    const uint64_t s2 = synd[p0][v - 1];
                    s.cur.entries.emplace_back(p0, v);
                    if (s2 == 0) s.record(lee);
                    if (lee < max_lee) s.dfs(p0 + 1, lee, s2);
                    s.cur.entries.pop_back();
                }
            }
        });
    for (auto& th : pool) th.join();

    DualSearchResult res;
    res.max_lee = max_lee;
    for (const std::string& t : pattern_types_up_to(max_lee)) res.count_by_type[t] = 0;
    std::map<std::string, unsigned> wit_per_type;
    for (const RootOut& r : roots) {
        for (unsigned w = 1; w <= max_lee; ++w) res.count_by_weight[w] += r.cw[w];
        for (const auto& [t, c] : r.types) res.count_by_type[t] += c;
        for (const DualPattern& p : r.wit) {
            std::string t = pattern_type(p);
            if (wit_per_type[t] < 2) {
                ++wit_per_type[t];
                res.witnesses.push_back(p);
            }
        }
    }
    return res;
}

unsigned dual_distance(const Code& code, unsigned max_lee, unsigned threads) {
    const DualSearchResult res = search_low_weight_duals(code, max_lee, threads);
    for (unsigned w = 1; w <= max_lee; ++w)
        if (res.count_by_weight[w]) return w;
    return 0;
}

bool nondegeneracy_check(const Code& code) {
    const RingR& ring = code.ring();
    const GF2m& f = code.field();
    if (f.m() > 12) throw feasibility_error("nondegeneracy loop refused for m > 12");
    const uint32_t q = f.order();
    for (uint32_t xa = 0; xa < q; ++xa)
        for (uint32_t xb = 0; xb < q; ++xb) {
            if (xa == 0 && xb == 0) continue;
            const RElem x{xa, xb};
            const RElem x3 = ring.cube(x);
            bool hit = false;
            for (uint64_t am = 0; am < uint64_t(q) * q && !hit; ++am)
                for (uint64_t bm = 0; bm < uint64_t(q) * q && !hit; ++bm) {
                    const RElem a{uint32_t(am) & (q - 1), uint32_t(am >> f.m())};
                    const RElem b{uint32_t(bm) & (q - 1), uint32_t(bm >> f.m())};
                    hit = ring.trace(ring.add(ring.mul(a, x), ring.mul(b, x3))) != kR0;
                }
            if (!hit) return false;
        }
    return true;
}

WeightDistribution macwilliams_binary(const WeightDistribution& dist, uint64_t n_bin,
                                      uint64_t k_bin) {
    mpz_class size = 0;
    for (const auto& [w, c] : dist) {
        if (w > n_bin) throw std::invalid_argument("weight exceeds code length");
        if (c < 0) throw std::invalid_argument("negative input coefficient");
        size += c;
    }
    mpz_class expected = 1;
    expected <<= k_bin;
    if (size != expected)
        throw std::invalid_argument("distribution does not sum to 2^k");

    auto binom = [](uint64_t nn, uint64_t kk) {
        mpz_class r;
        if (kk > nn) return r;  // zero
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(nn),
                     static_cast<unsigned long>(kk));
        return r;
    };

    WeightDistribution out;
    for (uint64_t j = 0; j <= n_bin; ++j) {
        mpz_class sum = 0;
        for (const auto& [i, a] : dist) {
            // Krawtchouk K_j(i) = sum_h (-1)^h C(i,h) C(n-i, j-h)
            mpz_class kv = 0;
            for (uint64_t h = 0; h <= j && h <= i; ++h) {
                mpz_class term = binom(i, h) * binom(n_bin - i, j - h);
                if (h & 1)
                    kv -= term;
                else
                    kv += term;
            }
            sum += a * kv;
        }
        if (!mpz_divisible_2exp_p(sum.get_mpz_t(), static_cast<mp_bitcnt_t>(k_bin)))
            throw std::runtime_error("MacWilliams transform is non-integral: "
                                     "inconsistent input distribution");
        mpz_class b = sum >> k_bin;
        if (b < 0)
            throw std::runtime_error("MacWilliams transform is negative: "
                                     "inconsistent input distribution");
        if (b != 0) out[j] = b;
    }
    return out;
}

}  // namespace tcode
