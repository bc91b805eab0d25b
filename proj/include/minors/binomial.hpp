#pragma once

#include <array>
#include <cstdint>

namespace minors {

// Pascal triangle up to C(44,22); everything needed here (orders <= 32,
// T_n up to n = 21 -> C(42,21)) fits comfortably in uint64.
inline constexpr int kBinomialMax = 44;

namespace detail {
constexpr auto make_binomial_table() {
    std::array<std::array<uint64_t, kBinomialMax + 1>, kBinomialMax + 1> t{};
    for (int n = 0; n <= kBinomialMax; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
}
inline constexpr auto kBinomialTable = make_binomial_table();
} // namespace detail

/// C(n, k); 0 when k is out of range.
constexpr uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > kBinomialMax) return 0;
    return detail::kBinomialTable[n][k];
}

/// Total number of (rows, cols) submatrix selections of an n x n matrix:
/// sum over k of C(n,k)^2 = C(2n,n) - 1.
constexpr uint64_t total_selections(int n) {
    return binomial(2 * n, n) - 1;
}

} // namespace minors
