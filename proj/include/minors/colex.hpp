#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minors/binomial.hpp"
#include "minors/errors.hpp"

namespace minors {

/// Colexicographic rank of a strictly increasing size-j subset of [0, n):
/// rank = sum_i C(subset[i], i+1). The all-smallest subset {0..j-1} has rank 0.
inline uint64_t colex_rank(std::span<const int> subset) {
    uint64_t r = 0;
    for (int i = 0; i < static_cast<int>(subset.size()); ++i)
        r += binomial(subset[i], i + 1);
    return r;
}

/// Inverse of colex_rank for size-j subsets of [0, n).
inline std::vector<int> colex_unrank(uint64_t rank, int j, int n) {
    if (rank >= binomial(n, j))
        throw CapacityError("colex_unrank: rank out of range");
    std::vector<int> subset(j);
    int c = n - 1;
    for (int i = j; i >= 1; --i) {
        while (binomial(c, i) > rank) --c;
        subset[i - 1] = c;
        rank -= binomial(c, i);
    }
    return subset;
}

/// Advance a strictly increasing subset of [0, n) to its colex successor.
/// Returns false (subset unchanged) when already at the colex maximum.
inline bool next_colex(std::span<int> c, int n) {
    const int j = static_cast<int>(c.size());
    for (int i = 0; i < j; ++i) {
        const int limit = (i + 1 < j) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (int t = 0; t < i; ++t) c[t] = t;
            return true;
        }
    }
    return false;
}

} // namespace minors
