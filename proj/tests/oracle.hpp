#pragma once

// Closed-form and Monte Carlo baselines for the acceptance gate. This
// header must stay free of project includes: numbers derived here are
// only trustworthy if they cannot share bugs with the implementation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Carrier tuples per watermark bit: pk in [1, n], selection pk % k1 == 0,
// bit index (pk / k1) % L.
inline std::vector<uint64_t> carrier_counts(uint64_t n, uint64_t k1, size_t L) {
    std::vector<uint64_t> counts(L, 0);
    for (uint64_t pk = 1; pk <= n; ++pk)
        if (pk % k1 == 0) counts[size_t((pk / k1) % L)]++;
    return counts;
}

// P(no carrier of one bit survives) when s of n tuples survive uniformly
// at random: hypergeometric, with the binomial (1 - s/n)^T cross-check.
inline double miss_probability_exact(uint64_t n, uint64_t s, uint64_t T) {
    double p = 1.0;
    for (uint64_t i = 0; i < T; ++i) p *= double(n - s - i) / double(n - i);
    return p;
}

inline double miss_probability_binomial(uint64_t n, uint64_t s, uint64_t T) {
    return std::pow(1.0 - double(s) / double(n), double(T));
}

// P(every bit keeps at least one carrier), treating bits as independent.
inline double all_covered_probability(uint64_t n, uint64_t k1, size_t L, uint64_t s) {
    double p = 1.0;
    for (uint64_t T : carrier_counts(n, k1, L)) p *= 1.0 - miss_probability_exact(n, s, T);
    return p;
}

// Monte Carlo check of the independence assumption above: fraction of
// trials in which a uniform s-subset of [1, n] covers every bit.
inline double mc_all_covered(uint64_t n, uint64_t k1, size_t L, uint64_t s, int trials,
                             uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 1);
    std::vector<uint8_t> covered(L);
    int ok = 0;
    for (int t = 0; t < trials; ++t) {
        for (uint64_t i = 0; i < s; ++i) {
            std::uniform_int_distribution<uint64_t> pick(i, n - 1);
            std::swap(idx[size_t(i)], idx[size_t(pick(rng))]);
        }
        std::fill(covered.begin(), covered.end(), 0);
        for (uint64_t i = 0; i < s; ++i) {
            uint64_t pk = idx[size_t(i)];
            if (pk % k1 == 0) covered[size_t((pk / k1) % L)] = 1;
        }
        if (std::all_of(covered.begin(), covered.end(), [](uint8_t c) { return c != 0; })) ok++;
    }
    return double(ok) / trials;
}

// P(X >= k) for X ~ Binomial(n, p), summed in log space.
inline double binomial_tail_ge(int n, int k, double p) {
    if (k <= 0) return 1.0;
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;
    double total = 0.0;
    for (int x = k; x <= n; ++x) {
        double lg = std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) +
                    x * std::log(p) + (n - x) * std::log1p(-p);
        total += std::exp(lg);
    }
    return std::min(total, 1.0);
}

struct ChanceBaseline {
    double mean_rate = 0.0;  // percent
    double sd_rate = 0.0;    // per-table, percent
    double max_rate = 0.0;
    int ge_50 = 0;  // tables at or above candidate thresholds
    int ge_75 = 0;
    int ge_90 = 0;
};

// Voting outcome on an unmarked table, simulated straight from the channel
// definitions: n tuples, pk 1..n, two numeric cells with uniform LSBs, one
// datetime with uniform mm/ss, selection pk % k1 == 0, bit (pk / k1) % L,
// phase-2 gate mm % k1 == 0, seconds decode ss / 2 == k2 -> vote ss % 2.
// The reference watermark is a fresh random L-bit image per table, and a
// bit matches when either channel's majority equals it (erasures never do).
inline ChanceBaseline mc_chance_baseline(int tables, uint64_t n, int k1, int k2, size_t L,
                                         uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> sexagesimal(0, 59);
    ChanceBaseline out;
    double sum = 0.0, sumsq = 0.0;
    for (int t = 0; t < tables; ++t) {
        std::vector<int64_t> ones1(L, 0), votes1(L, 0), ones2(L, 0), votes2(L, 0);
        for (uint64_t pk = 1; pk <= n; ++pk) {
            if (pk % uint64_t(k1) != 0) continue;
            size_t b = size_t((pk / uint64_t(k1)) % L);
            for (int c = 0; c < 2; ++c) {
                ones1[b] += coin(rng);
                votes1[b]++;
            }
            int mm = sexagesimal(rng);
            int ss = sexagesimal(rng);
            if (mm % k1 == 0 && ss / 2 == k2) {
                ones2[b] += ss % 2;
                votes2[b]++;
            }
        }
        int matched = 0;
        for (size_t b = 0; b < L; ++b) {
            int wm = coin(rng);
            int m1 = 2 * ones1[b] > votes1[b] ? 1 : (2 * ones1[b] < votes1[b] ? 0 : -1);
            int m2 = votes2[b] == 0
                         ? -1
                         : (2 * ones2[b] > votes2[b] ? 1 : (2 * ones2[b] < votes2[b] ? 0 : -1));
            if (m1 == wm || m2 == wm) matched++;
        }
        double rate = 100.0 * matched / double(L);
        sum += rate;
        sumsq += rate * rate;
        out.max_rate = std::max(out.max_rate, rate);
        if (rate >= 50.0) out.ge_50++;
        if (rate >= 75.0) out.ge_75++;
        if (rate >= 90.0) out.ge_90++;
    }
    out.mean_rate = sum / tables;
    out.sd_rate = std::sqrt(std::max(0.0, sumsq / tables - out.mean_rate * out.mean_rate));
    return out;
}

}  // namespace oracle
