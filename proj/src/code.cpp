#include "tcode/code.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace tcode {

namespace {

// Visit every row-combination index in [lo, hi) in Gray-code order.
// The combination at index i is brg(i) = i ^ (i >> 1); consecutive
// combinations differ in bit ctz(i), so each step is one row-XOR with a
// fused popcount sweep. visit(i, brg(i), weight).
template <class F>
void walk_gray(const std::vector<BitVec>& rows, uint64_t lo, uint64_t hi, F&& visit) {
    const size_t nw = rows[0].w.size();
    std::vector<uint64_t> acc(nw, 0);
    uint64_t g = lo ^ (lo >> 1);
    for (unsigned j = 0; j < rows.size(); ++j)
        if (g >> j & 1)
            for (size_t t = 0; t < nw; ++t) acc[t] ^= rows[j].w[t];
    uint64_t wt = 0;
    for (size_t t = 0; t < nw; ++t) wt += __builtin_popcountll(acc[t]);
    visit(lo, g, wt);
    for (uint64_t i = lo + 1; i < hi; ++i) {
        const unsigned j = unsigned(__builtin_ctzll(i));
        const uint64_t* rw = rows[j].w.data();
        wt = 0;
        for (size_t t = 0; t < nw; ++t) {
            acc[t] ^= rw[t];
            wt += __builtin_popcountll(acc[t]);
        }
        g ^= uint64_t(1) << j;
        visit(i, g, wt);
    }
}

unsigned clamp_threads(unsigned threads, uint64_t total) {
    if (threads < 1) threads = 1;
    if (threads > 256) threads = 256;
    if (threads > total) threads = unsigned(total);
    return threads;
}

}  // namespace

const char* to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::I: return "I";
        case CaseLabel::II1: return "II1";
        case CaseLabel::II2: return "II2";
        case CaseLabel::III1: return "III1";
        case CaseLabel::III2: return "III2";
        case CaseLabel::IV1: return "IV1";
        case CaseLabel::IV2: return "IV2";
        case CaseLabel::IV3: return "IV3";
        default: return "IV4";
    }
}

CaseLabel classify(const RingR& ring, RElem a, RElem b) {
    auto cls = [&](RElem x) { return ring.is_unit(x) ? 2 : (x.beta ? 1 : 0); };
    static constexpr CaseLabel table[3][3] = {
        {CaseLabel::I, CaseLabel::III1, CaseLabel::III2},
        {CaseLabel::II1, CaseLabel::IV1, CaseLabel::IV2},
        {CaseLabel::II2, CaseLabel::IV3, CaseLabel::IV4},
    };
    return table[cls(a)][cls(b)];
}

std::vector<uint64_t> predicted_weights(CaseLabel label, unsigned m) {
    if (m % 2 == 0)
        throw std::invalid_argument("weight classification holds for odd m only");
    const uint64_t w_sq = uint64_t(1) << (2 * m);            // 2^{2m}
    const uint64_t w_unit = w_sq - (uint64_t(1) << m);       // (2^m - 1) 2^m
    const uint64_t gap = uint64_t(1) << ((3 * m + 1) / 2);   // 2^{(3m+1)/2}
    switch (label) {
        case CaseLabel::I: return {0};
        case CaseLabel::II1:
        case CaseLabel::III1: return {w_sq};
        case CaseLabel::II2:
        case CaseLabel::III2:
        case CaseLabel::IV2:
        case CaseLabel::IV3: return {w_unit};
        case CaseLabel::IV1: return {w_sq - gap, w_sq, w_sq + gap};
        default: return {w_sq - (uint64_t(2) << m), w_sq};  // IV4: 2^m(2^m-2), 2^{2m}
    }
}

Code::Code(GF2m f) : ring_(f) {
    if (f.m() > 12)
        throw feasibility_error("code structures refused for m > 12 "
                                "(the coordinate set has (2^m - 1) 2^m units)");
    units_ = ring_.enumerate_units();
    cubes_.reserve(units_.size());
    for (const RElem& x : units_) cubes_.push_back(ring_.cube(x));

    const uint32_t q = field().order();
    unit_idx_.assign(uint64_t(q) * q, 0);
    for (size_t i = 0; i < units_.size(); ++i)
        unit_idx_[(uint64_t(units_[i].alpha) << f.m()) | units_[i].beta] = uint32_t(i) + 1;
}

const std::vector<BitVec>& Code::generator_rows() const {
    std::call_once(rows_once_, [this] {
        const unsigned m = field().m();
        rows_.reserve(4 * m);
        for (unsigned j = 0; j < m; ++j)
            rows_.push_back(gray_image(ev({uint32_t(1) << j, 0}, {0, 0})));
        for (unsigned j = 0; j < m; ++j)
            rows_.push_back(gray_image(ev({0, uint32_t(1) << j}, {0, 0})));
        for (unsigned j = 0; j < m; ++j)
            rows_.push_back(gray_image(ev({0, 0}, {uint32_t(1) << j, 0})));
        for (unsigned j = 0; j < m; ++j)
            rows_.push_back(gray_image(ev({0, 0}, {0, uint32_t(1) << j})));
    });
    return rows_;
}

CodeSpec Code::spec() const {
    const unsigned m = field().m();
    CodeSpec s;
    s.m = m;
    s.poly = field().reduction_poly();
    s.n = ring_.unit_count();
    s.n_bin = 2 * s.n;
    s.k_bin = 4 * m;
    return s;
}

size_t Code::unit_index(RElem x) const {
    if (!ring_.is_unit(x)) throw std::invalid_argument("not a unit");
    return unit_idx_[(uint64_t(x.alpha) << field().m()) | x.beta] - 1;
}

Codeword Code::ev(RElem a, RElem b) const {
    Codeword c(units_.size());
    for (size_t i = 0; i < units_.size(); ++i)
        c[i] = ring_.trace(ring_.add(ring_.mul(a, units_[i]), ring_.mul(b, cubes_[i])));
    return c;
}

BitVec Code::gray_image(const Codeword& c) const {
    const size_t n = c.size();
    BitVec v(2 * n);
    for (size_t i = 0; i < n; ++i) {
        if (br_gray_first(c[i])) v.set(i);
        if (br_gray_second(c[i])) v.set(n + i);
    }
    return v;
}

RElem Code::pair_a_of_mask(uint64_t g) const {
    const unsigned m = field().m();
    const uint32_t mask = field().max_elem();
    return {uint32_t(g) & mask, uint32_t(g >> m) & mask};
}

RElem Code::pair_b_of_mask(uint64_t g) const {
    const unsigned m = field().m();
    const uint32_t mask = field().max_elem();
    return {uint32_t(g >> (2 * m)) & mask, uint32_t(g >> (3 * m)) & mask};
}

WeightDistribution Code::enumerate_weights(unsigned threads) const {
    const unsigned k = 4 * field().m();
    if (k > 40)
        throw feasibility_error("enumeration over 2^" + std::to_string(k) +
                                " combinations refused (guard: 4m <= 40)");
    const uint64_t total = uint64_t(1) << k;
    threads = clamp_threads(threads, total);

    const uint64_t n_bin = 2 * ring_.unit_count();
    const std::vector<BitVec>& rows = generator_rows();
    std::vector<std::vector<uint64_t>> hists(threads);
    std::vector<std::thread> pool;
    const uint64_t chunk = total / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const uint64_t lo = t * chunk;
        const uint64_t hi = (t + 1 == threads) ? total : lo + chunk;
        hists[t].assign(n_bin + 1, 0);
        pool.emplace_back([&rows, lo, hi, &hist = hists[t]] {
            walk_gray(rows, lo, hi, [&hist](uint64_t, uint64_t, uint64_t wt) { ++hist[wt]; });
        });
    }
    for (auto& th : pool) th.join();

    WeightDistribution dist;
    for (uint64_t w = 0; w <= n_bin; ++w) {
        uint64_t c = 0;
        for (unsigned t = 0; t < threads; ++t) c += hists[t][w];
        if (c) dist[w] = mpz_class(static_cast<unsigned long>(c));
    }
    return dist;
}

int64_t Code::charsum_cubic(uint32_t b1, uint32_t b2) const {
    const GF2m& f = field();
    int64_t s = 0;
    for (uint32_t x = 0; x < f.order(); ++x) {
        uint32_t x3 = f.mul(f.mul(x, x), x);
        s += f.tr(f.add(f.mul(b1, x), f.mul(b2, x3))) ? -1 : 1;
    }
    return s;
}

int64_t Code::charsum_double(uint32_t a1, uint32_t b1, uint32_t a2, uint32_t b2) const {
    if (a1 == 0 || a2 == 0)
        throw std::invalid_argument("charsum_double needs a1, a2 nonzero");
    const GF2m& f = field();
    int64_t s = 0;
    for (uint32_t x0 = 1; x0 < f.order(); ++x0) {
        uint32_t x0sq = f.mul(x0, x0);
        unsigned outer = f.tr(f.add(f.mul(b1, x0), f.mul(b2, f.mul(x0sq, x0))));
        uint32_t coeff = f.add(a1, f.mul(a2, x0sq));
        for (uint32_t x1 = 0; x1 < f.order(); ++x1)
            s += (outer ^ f.tr(f.mul(coeff, x1))) ? -1 : 1;
    }
    return s;
}

CaseWeightReport Code::verify_case_weights(unsigned threads) const {
    const unsigned m = field().m();
    if (m % 2 == 0)
        throw std::invalid_argument("weight classification holds for odd m only");
    const unsigned k = 4 * m;
    if (k > 40)
        throw feasibility_error("verification over 2^" + std::to_string(k) +
                                " pairs refused (guard: 4m <= 40)");

    const uint32_t q = field().order();
    const uint32_t mask = q - 1;
    const uint64_t w_sq = uint64_t(1) << (2 * m);
    const uint64_t gap = uint64_t(1) << ((3 * m + 1) / 2);

    // Admissible weights per label, and the exact IV1 value via the
    // cubic sum: w = 2^{2m} - 2^m A(b1, b2).
    std::array<std::vector<uint64_t>, kNumCaseLabels> predicted;
    for (unsigned L = 0; L < kNumCaseLabels; ++L)
        predicted[L] = predicted_weights(CaseLabel(L), m);

    std::vector<int64_t> a_tab(uint64_t(q) * q, 0);
    for (uint32_t b1 = 1; b1 < q; ++b1)
        for (uint32_t b2 = 1; b2 < q; ++b2)
            a_tab[uint64_t(b1) * q + b2] = charsum_cubic(b1, b2);

    const uint64_t total = uint64_t(1) << k;
    threads = clamp_threads(threads, total);
    const std::vector<BitVec>& rows = generator_rows();
    std::vector<CaseWeightReport> parts(threads);
    std::vector<std::thread> pool;
    const uint64_t chunk = total / threads;

    for (unsigned t = 0; t < threads; ++t) {
        const uint64_t lo = t * chunk;
        const uint64_t hi = (t + 1 == threads) ? total : lo + chunk;
        pool.emplace_back([&, lo, hi, t] {
            CaseWeightReport& rep = parts[t];
            walk_gray(rows, lo, hi, [&](uint64_t i, uint64_t g, uint64_t wt) {
                const uint32_t a0 = uint32_t(g) & mask, a1 = uint32_t(g >> m) & mask;
                const uint32_t b0 = uint32_t(g >> (2 * m)) & mask,
                               b1 = uint32_t(g >> (3 * m)) & mask;
                const int ca = a0 ? 2 : (a1 ? 1 : 0);
                const int cb = b0 ? 2 : (b1 ? 1 : 0);
                static constexpr CaseLabel table[3][3] = {
                    {CaseLabel::I, CaseLabel::III1, CaseLabel::III2},
                    {CaseLabel::II1, CaseLabel::IV1, CaseLabel::IV2},
                    {CaseLabel::II2, CaseLabel::IV3, CaseLabel::IV4},
                };
                const CaseLabel label = table[ca][cb];
                const unsigned L = unsigned(label);
                ++rep.pairs_checked;
                ++rep.pairs_per_label[L];
                ++rep.observed[L][wt];
                const auto& pw = predicted[L];
                bool member = std::find(pw.begin(), pw.end(), wt) != pw.end();
                if (!member) {
                    ++rep.membership_violations;
                    if (rep.sample_violations.size() < 10) {
                        std::ostringstream os;
                        os << "pair " << i << " label " << to_string(label) << " weight " << wt;
                        rep.sample_violations.push_back(os.str());
                    }
                }
                if (label == CaseLabel::IV1) {
                    const int64_t A = a_tab[uint64_t(a1) * q + b1];
                    const int64_t expect = int64_t(w_sq) - (int64_t(1) << m) * A;
                    if (int64_t(wt) != expect) {
                        ++rep.iv1_formula_violations;
                        if (rep.sample_violations.size() < 10) {
                            std::ostringstream os;
                            os << "pair " << i << " IV1 weight " << wt << " != " << expect;
                            rep.sample_violations.push_back(os.str());
                        }
                    }
                    if (wt == w_sq - gap)
                        ++rep.iv1_at_minus;
                    else if (wt == w_sq)
                        ++rep.iv1_at_mid;
                    else if (wt == w_sq + gap)
                        ++rep.iv1_at_plus;
                }
            });
        });
    }
    for (auto& th : pool) th.join();

    CaseWeightReport rep;
    for (const CaseWeightReport& p : parts) {
        rep.pairs_checked += p.pairs_checked;
        rep.membership_violations += p.membership_violations;
        rep.iv1_formula_violations += p.iv1_formula_violations;
        rep.iv1_at_minus += p.iv1_at_minus;
        rep.iv1_at_mid += p.iv1_at_mid;
        rep.iv1_at_plus += p.iv1_at_plus;
        for (unsigned L = 0; L < kNumCaseLabels; ++L) {
            rep.pairs_per_label[L] += p.pairs_per_label[L];
            for (const auto& [w, c] : p.observed[L]) rep.observed[L][w] += c;
        }
        for (const std::string& s : p.sample_violations)
            if (rep.sample_violations.size() < 10) rep.sample_violations.push_back(s);
    }
    return rep;
}

PermInvReport Code::permutation_invariance_check(unsigned trials, uint64_t seed) const {
    std::mt19937_64 rng(seed);
    const uint32_t mask = field().max_elem();
    PermInvReport rep;
    rep.trials = trials;
    for (unsigned t = 0; t < trials; ++t) {
        const RElem g = units_[rng() % units_.size()];
        const RElem a{uint32_t(rng()) & mask, uint32_t(rng()) & mask};
        const RElem b{uint32_t(rng()) & mask, uint32_t(rng()) & mask};
        const Codeword lhs = ev(a, b);
        const Codeword rhs = ev(ring_.mul(a, g), ring_.mul(b, ring_.cube(g)));
        bool ok = true;
        for (size_t i = 0; i < units_.size() && ok; ++i)
            ok = rhs[i] == lhs[unit_index(ring_.mul(g, units_[i]))];
        if (ok) ++rep.passes;
    }
    return rep;
}

std::string distribution_cache_name(const CodeSpec& spec) {
    std::ostringstream os;
    os << "dist_m" << spec.m << "_poly" << spec.poly << ".txt";
    return os.str();
}

void save_distribution(const std::string& path, const CodeSpec& spec,
                       const WeightDistribution& dist) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "tcode-dist v1\n";
    out << "m " << spec.m << " poly " << spec.poly << "\n";
    for (const auto& [w, c] : dist) out << w << " " << c.get_str() << "\n";
}

bool load_distribution(const std::string& path, const CodeSpec& spec,
                       WeightDistribution& dist) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != "tcode-dist v1") return false;
    unsigned m = 0;
    uint32_t poly = 0;
    std::string tag1, tag2;
    if (!(in >> tag1 >> m >> tag2 >> poly) || tag1 != "m" || tag2 != "poly") return false;
    if (m != spec.m || poly != spec.poly) return false;
    WeightDistribution d;
    uint64_t w;
    std::string count;
    while (in >> w >> count) d[w] = mpz_class(count);
    if (d.empty()) return false;
    dist = std::move(d);
    return true;
}

}  // namespace tcode
