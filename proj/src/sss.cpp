#include "tcode/sss.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>
#include <thread>

namespace tcode {

namespace {

void check_span_guard(size_t k) {
    if (k > 22)
        throw feasibility_error("pairwise cover analysis refused for 2^" +
                                std::to_string(k) + " codewords (guard: 2^k <= 2^22)");
}

// Minimality flag per word in span order. Only strictly lighter words
// can be strictly covered; equal-weight covering forces equality.
std::vector<uint8_t> minimal_flags(const std::vector<BitVec>& words, unsigned threads) {
    const size_t total = words.size();
    std::vector<uint32_t> order(total);
    for (size_t i = 0; i < total; ++i) order[i] = uint32_t(i);
    std::vector<uint64_t> wt(total);
    for (size_t i = 0; i < total; ++i) wt[i] = words[i].weight();
    std::sort(order.begin(), order.end(),
              [&wt](uint32_t a, uint32_t b) { return wt[a] < wt[b]; });

    std::vector<uint8_t> minimal(total, 0);
    if (threads < 1) threads = 1;
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const size_t p = next.fetch_add(1);
                if (p >= total) return;
                const uint32_t i = order[p];
                if (wt[i] == 0) continue;  // zero word excluded by definition
                bool ok = true;
                for (size_t qp = 0; qp < total && ok; ++qp) {
                    const uint32_t j = order[qp];
                    if (wt[j] >= wt[i]) break;  // sorted: nothing lighter remains
                    if (wt[j] == 0) continue;
                    ok = !words[i].covers(words[j]);
                }
                minimal[i] = ok;
            }
        });
    for (auto& th : pool) th.join();
    return minimal;
}

// lambda combination over the users' columns expressing column 0, if any.
std::optional<BitVec> solve_column_combination(const std::vector<uint32_t>& users,
                                               const std::vector<BitVec>& rows) {
    const size_t k = rows.size();
    const uint64_t n_bin = rows.empty() ? 0 : rows[0].nbits;
    auto column = [&](size_t pos) {
        uint64_t c = 0;
        for (size_t r = 0; r < k; ++r)
            if (rows[r].get(pos)) c |= uint64_t(1) << r;
        return c;
    };

    std::vector<std::pair<uint64_t, BitVec>> pivots;  // (reduced column, combo)
    auto reduce = [&pivots](uint64_t v, BitVec& combo) {
        for (const auto& [pv, pc] : pivots) {
            const uint64_t high = uint64_t(1) << (63 - __builtin_clzll(pv));
            if (v & high) {
                v ^= pv;
                combo.xor_with(pc);
            }
        }
        return v;
    };

    for (size_t i = 0; i < users.size(); ++i) {
        const uint32_t u = users[i];
        if (u < 2 || u > n_bin)
            throw std::invalid_argument("user index out of range");
        BitVec combo(users.size());
        combo.set(i);
        uint64_t v = reduce(column(u - 1), combo);
        if (v) pivots.emplace_back(v, std::move(combo));
    }
    BitVec combo(users.size());
    if (reduce(column(0), combo) != 0) return std::nullopt;
    return combo;
}

}  // namespace

std::vector<BitVec> span_codewords(const std::vector<BitVec>& rows) {
    check_span_guard(rows.size());
    if (rows.empty()) throw std::invalid_argument("no generator rows");
    const uint64_t total = uint64_t(1) << rows.size();
    std::vector<BitVec> words;
    words.reserve(total);
    BitVec acc(rows[0].nbits);
    words.push_back(acc);
    for (uint64_t i = 1; i < total; ++i) {
        acc.xor_with(rows[__builtin_ctzll(i)]);
        words.push_back(acc);
    }
    return words;
}

ABResult ab_condition(const WeightDistribution& dist, unsigned q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    ABResult r;
    for (const auto& [w, c] : dist) {
        if (w == 0 || c == 0) continue;
        if (r.w_min == 0) r.w_min = w;
        r.w_max = w;
    }
    if (r.w_min == 0) throw std::invalid_argument("distribution has no nonzero weight");
    r.holds = mpz_class(q) * r.w_min > mpz_class(q - 1) * r.w_max;
    return r;
}

// Distinct codewords only: dependent rows make every word appear
// 2^{k - rank} times in the span walk.
static std::vector<BitVec> distinct_codewords(const std::vector<BitVec>& rows) {
    std::vector<BitVec> words = span_codewords(rows);
    std::sort(words.begin(), words.end(),
              [](const BitVec& a, const BitVec& b) { return a.w < b.w; });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

MinimalityReport minimal_codewords(const std::vector<BitVec>& rows, unsigned threads) {
    const std::vector<BitVec> words = distinct_codewords(rows);
    const std::vector<uint8_t> flags = minimal_flags(words, threads);
    MinimalityReport rep;
    for (size_t i = 0; i < words.size(); ++i) {
        const uint64_t w = words[i].weight();
        if (w == 0) continue;
        ++rep.nonzero_words;
        if (flags[i]) {
            ++rep.minimal_words;
            ++rep.minimal_by_weight[w];
        }
    }
    rep.all_minimal = rep.minimal_words == rep.nonzero_words;
    return rep;
}

AccessStructure massey_access_structure(const std::vector<BitVec>& rows,
                                        unsigned threads) {
    const std::vector<BitVec> words = distinct_codewords(rows);
    const std::vector<uint8_t> flags = minimal_flags(words, threads);
    const uint64_t n_bin = rows[0].nbits;

    AccessStructure st;
    st.users = n_bin - 1;
    BitVec and_acc(n_bin);
    for (uint64_t i = 0; i < n_bin; ++i) and_acc.set(i);

    for (size_t i = 0; i < words.size(); ++i) {
        if (!flags[i] || !words[i].get(0)) continue;
        std::vector<uint32_t> set;
        for (uint64_t pos = 1; pos < n_bin; ++pos)
            if (words[i].get(pos)) set.push_back(uint32_t(pos) + 1);
        st.minimal_access_sets.push_back(std::move(set));
        and_acc.and_with(words[i]);
    }
    if (st.minimal_access_sets.empty()) {
        st.degenerate = true;
        return st;
    }
    for (uint64_t pos = 1; pos < n_bin; ++pos)
        if (and_acc.get(pos)) st.dictators.push_back(uint32_t(pos) + 1);
    return st;
}

AccessSummary massey_summary_all_minimal(const std::vector<BitVec>& rows) {
    if (rows.empty() || rows.size() > 40)
        throw feasibility_error("streaming span walk refused for k > 40");
    const uint64_t n_bin = rows[0].nbits;
    AccessSummary s;
    s.users = n_bin - 1;
    BitVec and_acc(n_bin);
    for (uint64_t i = 0; i < n_bin; ++i) and_acc.set(i);

    const uint64_t total = uint64_t(1) << rows.size();
    BitVec acc(n_bin);
    uint64_t hits = 0;
    for (uint64_t i = 1; i < total; ++i) {
        acc.xor_with(rows[__builtin_ctzll(i)]);
        if (acc.get(0)) {
            ++hits;
            and_acc.and_with(acc);
        }
    }
    // dependent rows walk every codeword 2^{k - rank} times
    hits >>= rows.size() - gf2_rank(rows);
    s.minimal_access_sets = mpz_class(static_cast<unsigned long>(hits));
    if (hits == 0) {
        s.degenerate = true;
        return s;
    }
    for (uint64_t pos = 1; pos < n_bin; ++pos)
        if (and_acc.get(pos)) s.dictators.push_back(uint32_t(pos) + 1);
    return s;
}

BitVec deal_shares(unsigned secret, uint64_t seed, const std::vector<BitVec>& rows) {
    if (rows.empty()) throw std::invalid_argument("no generator rows");
    if (rows.size() > 40) throw feasibility_error("dealing refused for k > 40");

    // Normalize so exactly one basis row hits coordinate 1.
    std::vector<BitVec> basis = rows;
    size_t pivot = basis.size();
    for (size_t r = 0; r < basis.size(); ++r)
        if (basis[r].get(0)) {
            pivot = r;
            break;
        }
    if (pivot == basis.size())
        throw std::invalid_argument("secret coordinate is identically zero");
    for (size_t r = 0; r < basis.size(); ++r)
        if (r != pivot && basis[r].get(0)) basis[r].xor_with(basis[pivot]);

    std::mt19937_64 rng(seed);
    const uint64_t draw = rng();
    BitVec cw(rows[0].nbits);
    unsigned bit = 0;
    for (size_t r = 0; r < basis.size(); ++r) {
        if (r == pivot) continue;
        if ((draw >> bit++) & 1) cw.xor_with(basis[r]);
    }
    if (secret & 1) cw.xor_with(basis[pivot]);
    return cw;
}

unsigned reconstruct(const std::vector<uint32_t>& users,
                     const std::vector<uint8_t>& share_bits,
                     const std::vector<BitVec>& rows) {
    if (users.size() != share_bits.size())
        throw std::invalid_argument("one share per user required");
    const std::optional<BitVec> combo = solve_column_combination(users, rows);
    if (!combo)
        throw std::runtime_error("access set is not qualified: no reconstruction");
    unsigned secret = 0;
    for (size_t i = 0; i < users.size(); ++i)
        if (combo->get(i)) secret ^= share_bits[i] & 1;
    return secret;
}

bool is_qualified(const std::vector<uint32_t>& users, const std::vector<BitVec>& rows) {
    return solve_column_combination(users, rows).has_value();
}

}  // namespace tcode
