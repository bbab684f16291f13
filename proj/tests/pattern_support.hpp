#pragma once

// Shared helpers for exhaustive correction-guarantee tests.
//
// A deterministic impairment of (t errors, rho deletions, s insertions)
// applied to X realizes as: remove some D subset of X with |D| = rho + t,
// add some A subset of the complement of X with |A| = t + s (an error is
// a deletion of the original plus an insertion of the corrupted packet).
// Enumerating (D, A) pairs therefore covers every placement of the cell.

#include <cstdint>
#include <random>
#include <vector>

#include "subsetcode/core.hpp"

namespace testsupport {

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Number of distinct (D, A) placements of cell (t, rho, s) on a codeword
/// of size l in a universe of 2^n packets.
inline std::uint64_t placement_count(std::size_t l, std::uint64_t universe, unsigned t,
                                     unsigned rho, unsigned s) {
    return binom(l, rho + t) * binom(universe - l, t + s);
}

template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Calls fn(received) for every placement of the cell on sent.
template <class Fn>
void for_each_placement(const subsetcode::SubsetCodeword& sent, unsigned t, unsigned rho,
                        unsigned s, Fn fn) {
    using subsetcode::SubsetCodeword;
    std::vector<std::uint64_t> elems(sent.begin(), sent.end());
    std::uint64_t universe = sent.ambient().universe_size();
    std::vector<std::uint64_t> outside;
    outside.reserve(universe - elems.size());
    for (std::uint64_t v = 0; v < universe; ++v)
        if (!sent.contains(v)) outside.push_back(v);

    for_each_combination(elems.size(), rho + t, [&](const std::vector<std::size_t>& del) {
        SubsetCodeword survivors(sent.packet_bits());
        std::size_t di = 0;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (di < del.size() && del[di] == i) { ++di; continue; }
            survivors.insert(elems[i]);
        }
        for_each_combination(outside.size(), t + s, [&](const std::vector<std::size_t>& add) {
            SubsetCodeword received = survivors;
            for (std::size_t a : add) received.insert(outside[a]);
            fn(received);
        });
    });
}

/// Calls fn(received) for `count` uniformly random placements.
template <class Fn>
void sample_placements(const subsetcode::SubsetCodeword& sent, unsigned t, unsigned rho,
                       unsigned s, std::size_t count, std::mt19937_64& rng, Fn fn) {
    using subsetcode::SubsetCodeword;
    std::vector<std::uint64_t> elems(sent.begin(), sent.end());
    std::uint64_t universe = sent.ambient().universe_size();
    std::vector<std::uint64_t> outside;
    for (std::uint64_t v = 0; v < universe; ++v)
        if (!sent.contains(v)) outside.push_back(v);

    for (std::size_t trial = 0; trial < count; ++trial) {
        std::vector<std::uint64_t> pool = elems;
        SubsetCodeword received(sent.packet_bits());
        for (unsigned i = 0; i < rho + t; ++i) {
            std::size_t j = i + rng() % (pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        for (std::size_t i = rho + t; i < pool.size(); ++i) received.insert(pool[i]);
        std::vector<std::uint64_t> free = outside;
        for (unsigned i = 0; i < t + s; ++i) {
            std::size_t j = i + rng() % (free.size() - i);
            std::swap(free[i], free[j]);
            received.insert(free[i]);
        }
        fn(received);
    }
}

/// The four-element universe toy code: S = {a, b, c, d} as 2-bit packets
/// 00, 01, 10, 11; codewords {a,b}, {a,c}, {b,c}, {c,d}.
inline std::vector<subsetcode::SubsetCodeword> toy_code() {
    using subsetcode::SubsetCodeword;
    return {SubsetCodeword(2, {0, 1}), SubsetCodeword(2, {0, 2}),
            SubsetCodeword(2, {1, 2}), SubsetCodeword(2, {2, 3})};
}

}  // namespace testsupport
