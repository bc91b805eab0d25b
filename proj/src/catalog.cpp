#include "minors/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "minors/determinant.hpp"

namespace minors {

namespace {

std::vector<uint64_t> run_set(std::initializer_list<std::pair<uint64_t, uint64_t>> runs) {
    std::vector<uint64_t> out;
    for (auto [lo, hi] : runs)
        for (uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

} // namespace

MaxDetTable::MaxDetTable()
    : delta_{0, // unused slot 0
             1,       1,       1,       2,        3,        5,        9,
             32,      56,      144,     320,      1458,     3645,     9477,
             25515,   131072,  327680,  1114112,  3411968,  19531250, 56640625} {}

const MaxDetTable& MaxDetTable::instance() {
    static const MaxDetTable table;
    return table;
}

uint64_t MaxDetTable::delta(int n) const {
    if (n < 1 || n > kMaxOrder)
        throw CapacityError("maximal determinant known only for orders 1..21");
    return delta_[n];
}

int64_t MaxDetTable::d(int n) const {
    return static_cast<int64_t>(delta(n)) << (n - 1);
}

SpectrumTable::SpectrumTable() {
    sets_.resize(kMaxOrder + 1);
    sets_[1] = {1};
    sets_[2] = {0, 1};
    sets_[3] = {0, 1};
    sets_[4] = run_set({{0, 2}});
    sets_[5] = run_set({{0, 3}});
    sets_[6] = run_set({{0, 5}});
    sets_[7] = run_set({{0, 9}});
    sets_[8] = run_set({{0, 18}, {20, 20}, {24, 24}, {32, 32}});
    sets_[9] = run_set({{0, 40}, {42, 42}, {44, 44}, {45, 45}, {48, 48}, {56, 56}});
    sets_[10] = run_set({{0, 102},
                         {104, 105},
                         {108, 108},
                         {110, 110},
                         {112, 112},
                         {116, 117},
                         {120, 120},
                         {125, 125},
                         {128, 128},
                         {144, 144}});
    sets_[11] = run_set({{0, 268},
                         {270, 276},
                         {278, 280},
                         {282, 286},
                         {288, 288},
                         {291, 291},
                         {294, 297},
                         {304, 304},
                         {312, 312},
                         {315, 315},
                         {320, 320}});
}

const SpectrumTable& SpectrumTable::instance() {
    static const SpectrumTable table;
    return table;
}

const std::vector<uint64_t>& SpectrumTable::spectrum(int n) const {
    if (n < 1 || n > kMaxOrder)
        throw CapacityError("spectrum known only for orders 1..11");
    return sets_[n];
}

std::vector<uint64_t> spectrum_brute_force(int n) {
    if (n < 1 || n > 6) throw CapacityError("spectrum_brute_force practical only for n <= 6");
    // Every {+1,-1} matrix is sign-equivalent to one with +1 first row/column,
    // and |det|/2^(n-1) equals |det| of the inner (n-1)^2 0/1 complement
    // pattern, so sweep all 0/1 matrices of order n-1.
    std::vector<bool> seen;
    const int d = n - 1;
    if (d == 0) return {1};
    std::vector<uint64_t> found;
    const uint64_t total = uint64_t{1} << (d * d);
    std::vector<int64_t> buf(static_cast<size_t>(d) * d);
    seen.assign(1u << 20, false);
    for (uint64_t bits = 0; bits < total; ++bits) {
        for (int i = 0; i < d * d; ++i) buf[i] = (bits >> i) & 1;
        const uint64_t v =
            static_cast<uint64_t>(std::llabs(det_exact_inplace(std::span(buf), d)));
        if (!seen[v]) {
            seen[v] = true;
            found.push_back(v);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

SignMatrix sylvester(int k) {
    if (k < 0 || k > 5) throw CapacityError("sylvester supports k <= 5 (order <= 32)");
    SignMatrix h = SignMatrix::ones(1);
    for (int step = 0; step < k; ++step) {
        const int n = h.order();
        std::vector<int8_t> e(static_cast<size_t>(2 * n) * (2 * n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int8_t v = static_cast<int8_t>(h.entry(i, j));
                e[static_cast<size_t>(i) * 2 * n + j] = v;
                e[static_cast<size_t>(i) * 2 * n + n + j] = v;
                e[static_cast<size_t>(i + n) * 2 * n + j] = v;
                e[static_cast<size_t>(i + n) * 2 * n + n + j] = static_cast<int8_t>(-v);
            }
        }
        h = SignMatrix(2 * n, std::move(e));
    }
    return h;
}

SignMatrix paley_hadamard(int q) {
    const bool supported = (q == 3 || q == 7 || q == 11 || q == 19 || q == 23);
    if (!supported)
        throw CapacityError("paley_hadamard needs a prime q == 3 (mod 4) in {3,7,11,19,23}");
    const int n = q + 1;
    std::vector<int8_t> chi(q, -1); // quadratic character, chi[0] unused
    for (int t = 1; t < q; ++t) chi[(t * t) % q] = 1;
    std::vector<int8_t> e(static_cast<size_t>(n) * n, 1);
    // Border of +1, core Q - I with Q the Jacobsthal matrix.
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            const int diff = ((j - i) % q + q) % q;
            e[static_cast<size_t>(i) * n + j] = (diff == 0) ? int8_t{-1} : chi[diff];
        }
    }
    return SignMatrix(n, std::move(e));
}

SignMatrix kron(const SignMatrix& h1, const SignMatrix& h2) {
    if (!is_hadamard(h1) || !is_hadamard(h2))
        throw CapacityError("kron requires Hadamard inputs");
    const int n1 = h1.order(), n2 = h2.order();
    if (n1 * n2 > SignMatrix::kMaxOrder)
        throw CapacityError("kron result exceeds the supported order cap");
    const int n = n1 * n2;
    std::vector<int8_t> e(static_cast<size_t>(n) * n);
    for (int i1 = 0; i1 < n1; ++i1)
        for (int i2 = 0; i2 < n2; ++i2)
            for (int j1 = 0; j1 < n1; ++j1)
                for (int j2 = 0; j2 < n2; ++j2)
                    e[static_cast<size_t>(i1 * n2 + i2) * n + (j1 * n2 + j2)] =
                        static_cast<int8_t>(h1.entry(i1, j1) * h2.entry(i2, j2));
    return SignMatrix(n, std::move(e));
}

SignMatrix maxdet13() {
    constexpr int n = 13;
    constexpr uint32_t kDifferenceSet = (1u << 0) | (1u << 1) | (1u << 3) | (1u << 9);
    std::vector<int8_t> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int diff = ((j - i) % n + n) % n;
            e[static_cast<size_t>(i) * n + j] = (kDifferenceSet >> diff) & 1 ? int8_t{-1} : int8_t{1};
        }
    return normalize_first_row_col(SignMatrix(n, std::move(e)));
}

} // namespace minors
