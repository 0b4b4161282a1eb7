#pragma once

// Classical value of the qudit CHSH game: count over settings (x,y) of
// a_x + b_y + xy = 0 mod p, maximized over deterministic assignment vectors.
// Exact enumeration for p <= 7 (Alice vectors with a_0 pinned to 0 by shift
// symmetry, Bob solved greedily per setting, which is exact because the
// objective separates over y); seeded hill-climbing beyond that.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qmagic/errors.hpp"
#include "qmagic/field.hpp"

namespace qmagic {

struct LhvStrategy {
    std::vector<std::int64_t> alice;  // a_x, length p
    std::vector<std::int64_t> bob;    // b_y, length p
};

struct LhvResult {
    std::int64_t value = 0;
    LhvStrategy strategy;
    bool exact = false;
    std::int64_t restarts_used = 0;
};

inline std::int64_t lhv_value(const LhvStrategy& s, std::int64_t p) {
    if (!is_prime(p)) throw UnsupportedDimension("lhv_value: p must be prime");
    if (static_cast<std::int64_t>(s.alice.size()) != p ||
        static_cast<std::int64_t>(s.bob.size()) != p)
        throw DimensionMismatch("lhv_value: assignment vectors must have length p");
    std::int64_t n = 0;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            if ((s.alice[x] + s.bob[y] + x * y) % p == 0) ++n;
    return n;
}

namespace detail {

// Best Bob response to a fixed Alice vector. For each y the count histogram
// over b is |{x : a_x + xy = -b}|; ties broken toward the smallest b for
// determinism.
inline std::int64_t greedy_bob(const std::vector<std::int64_t>& alice, std::int64_t p,
                               std::vector<std::int64_t>* bob_out) {
    std::int64_t total = 0;
    if (bob_out) bob_out->assign(p, 0);
    std::vector<std::int64_t> hist(p);
    for (std::int64_t y = 0; y < p; ++y) {
        std::fill(hist.begin(), hist.end(), 0);
        for (std::int64_t x = 0; x < p; ++x) {
            std::int64_t b = (-(alice[x] + x * y)) % p;
            if (b < 0) b += p;
            ++hist[b];
        }
        std::int64_t best_b = 0;
        for (std::int64_t b = 1; b < p; ++b)
            if (hist[b] > hist[best_b]) best_b = b;
        total += hist[best_b];
        if (bob_out) (*bob_out)[y] = best_b;
    }
    return total;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 step
    std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

// Global maximum by enumeration over the p^{p-1} Alice vectors with a_0 = 0.
inline LhvResult lhv_exact(std::int64_t p) {
    if (!is_prime(p)) throw UnsupportedDimension("lhv_exact: p must be prime");
    if (p > 7)
        throw BudgetExceeded("lhv_exact: enumeration capped at p = 7; use lhv_search");

    std::vector<std::int64_t> alice(p, 0);
    LhvResult best;
    best.value = -1;
    best.exact = true;

    while (true) {
        const std::int64_t v = detail::greedy_bob(alice, p, nullptr);
        if (v > best.value) {
            best.value = v;
            best.strategy.alice = alice;
            detail::greedy_bob(alice, p, &best.strategy.bob);
        }
        // odometer over a_1..a_{p-1}
        std::int64_t i = p - 1;
        while (i >= 1 && alice[i] == p - 1) alice[i--] = 0;
        if (i == 0) break;
        ++alice[i];
    }
    return best;
}

// Hill climbing over single-coordinate changes of the Alice vector with the
// exact greedy Bob response; strict-improvement acceptance, random restarts,
// deterministic under the seed. The returned value is a certified lower
// bound: the strategy re-scores to it exactly.
inline LhvResult lhv_search(std::int64_t p, std::int64_t restarts, std::uint64_t seed) {
    if (!is_prime(p) || p == 2) throw UnsupportedDimension("lhv_search: p must be an odd prime");
    if (restarts < 1) throw BudgetExceeded("lhv_search: restarts must be >= 1");

    LhvResult best;
    best.value = -1;
    best.exact = false;
    best.restarts_used = restarts;

    std::vector<std::int64_t> alice(p);
    for (std::int64_t r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(detail::mix_seed(seed, static_cast<std::uint64_t>(r)));
        std::uniform_int_distribution<std::int64_t> uni(0, p - 1);
        alice[0] = 0;
        for (std::int64_t i = 1; i < p; ++i) alice[i] = uni(rng);

        std::int64_t cur = detail::greedy_bob(alice, p, nullptr);
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::int64_t x = 0; x < p; ++x) {
                std::int64_t keep = alice[x];
                for (std::int64_t val = 0; val < p; ++val) {
                    if (val == keep) continue;
                    alice[x] = val;
                    const std::int64_t v = detail::greedy_bob(alice, p, nullptr);
                    if (v > cur) {
                        cur = v;
                        keep = val;
                        improved = true;
                    }
                }
                alice[x] = keep;
            }
        }
        if (cur > best.value) {
            best.value = cur;
            best.strategy.alice = alice;
            detail::greedy_bob(alice, p, &best.strategy.bob);
        }
    }
    return best;
}

}  // namespace qmagic
