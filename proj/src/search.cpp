#include <bit>
#include <chrono>
#include <cmath>

#include "minors/catalog.hpp"
#include "minors/determinant.hpp"
#include "minors/int128.hpp"

namespace minors {

namespace {

// det of the k x k Gram matrix (int64 entries, int128 cross products).
// Gram entries are bounded by n and its minors by n^k, safe for n <= 15.
int64_t gram_det_exact(const int64_t* gram, int k, int stride) {
    int64_t buf[SignMatrix::kMaxOrder * SignMatrix::kMaxOrder];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) buf[i * k + j] = gram[static_cast<size_t>(i) * stride + j];
    return det_exact_inplace(std::span<int64_t>(buf, static_cast<size_t>(k) * k), k);
}

double gram_det_cholesky(const int64_t* gram, int k, int stride) {
    double l[SignMatrix::kMaxOrder * SignMatrix::kMaxOrder];
    double det = 1.0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = static_cast<double>(gram[static_cast<size_t>(i) * stride + j]);
            for (int t = 0; t < j; ++t) s -= l[i * k + t] * l[j * k + t];
            if (i == j) {
                if (s <= 0.0) return 0.0;
                l[i * k + i] = std::sqrt(s);
                det *= s;
            } else {
                l[i * k + j] = s / l[j * k + j];
            }
        }
    }
    return det;
}

struct SearchState {
    int n;
    int64_t target;
    u128 target_sq;
    int64_t pair_dot_max; // per-pair necessary condition from the Fischer bound
    uint64_t node_limit;
    std::chrono::steady_clock::time_point deadline;
    uint64_t nodes = 0;
    int64_t best_abs = 0;
    bool out_of_budget = false;

    std::vector<uint32_t> row_masks; // full n-bit masks, bit j set => entry -1
    std::vector<int64_t> gram;       // n x n, top-left k x k valid

    bool found = false;
    std::vector<uint32_t> solution;
};

bool budget_spent(SearchState& st) {
    if (st.nodes >= st.node_limit) return true;
    if ((st.nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() >= st.deadline) return true;
    return false;
}

// Fischer: det(A)^2 = det(G_n) <= det(G_k) * n^(n-k) for any completion.
bool may_complete(SearchState& st, int k) {
    const int n = st.n;
    u128 det_g;
    if (n <= 15) {
        const int64_t g = gram_det_exact(st.gram.data(), k, n);
        if (g <= 0) return false; // dependent rows can never reach a nonzero target
        det_g = static_cast<u128>(g);
    } else {
        const double g = gram_det_cholesky(st.gram.data(), k, n) * (1.0 + 1e-6);
        if (g < 1.0) return false;
        det_g = static_cast<u128>(g);
        ++det_g; // keep the float path an over-approximation
    }
    u128 bound = det_g;
    for (int i = 0; i < n - k; ++i) {
        if (bound > (~u128{0}) / static_cast<unsigned>(n)) return true; // saturated
        bound *= static_cast<unsigned>(n);
    }
    return bound >= st.target_sq;
}

void dfs(SearchState& st, int k) {
    if (st.found || st.out_of_budget) return;
    ++st.nodes;
    if (budget_spent(st)) {
        st.out_of_budget = true;
        return;
    }
    const int n = st.n;
    if (k == n) {
        const SignMatrix a = SignMatrix::from_minus_masks(n, st.row_masks);
        const int64_t abs = std::llabs(det_exact(a));
        if (abs > st.best_abs) st.best_abs = abs;
        if (abs == st.target) {
            st.found = true;
            st.solution = st.row_masks;
        }
        return;
    }

    auto try_mask = [&](uint32_t mask) {
        st.row_masks[k] = mask;
        for (int i = 1; i < k; ++i) {
            // dots against rows >= 1; row 0 is all +1, handled by popcount too
            const int64_t dot = n - 2 * std::popcount(st.row_masks[i] ^ mask);
            if (std::llabs(dot) > st.pair_dot_max) return;
            st.gram[static_cast<size_t>(i) * n + k] = dot;
            st.gram[static_cast<size_t>(k) * n + i] = dot;
        }
        const int64_t dot0 = n - 2 * std::popcount(mask);
        if (std::llabs(dot0) > st.pair_dot_max) return;
        st.gram[k] = dot0;
        st.gram[static_cast<size_t>(k) * n] = dot0;
        st.gram[static_cast<size_t>(k) * n + k] = n;
        if (may_complete(st, k + 1)) dfs(st, k + 1);
    };

    if (k == 1) {
        // Row 1 canonical: a block of -1s in the top columns (any row pattern
        // can be brought to this form by permuting columns 1..n-1).
        for (int w = 1; w < n && !st.found && !st.out_of_budget; ++w) {
            const uint32_t mask = ((uint32_t{1} << w) - 1) << (n - w);
            try_mask(mask);
        }
        return;
    }
    // Rows 2..n-1 in strictly increasing bitmask order (their order is free).
    const uint32_t lo = (k >= 3) ? (st.row_masks[k - 1] >> 1) + 1 : 1;
    const uint32_t hi = uint32_t{1} << (n - 1);
    for (uint32_t inner = lo; inner < hi && !st.found && !st.out_of_budget; ++inner) {
        try_mask(inner << 1); // column 0 stays +1
    }
}

} // namespace

double search_completion_bound(std::span<const int64_t> gram, int k, int n) {
    std::vector<int64_t> buf(gram.begin(), gram.end());
    const int64_t g = det_exact_inplace(std::span(buf), k);
    if (g <= 0) return 0.0;
    return static_cast<double>(g) * std::pow(static_cast<double>(n), n - k);
}

SearchOutcome search_maxdet(int n, int64_t target, const SearchBudget& budget) {
    if (n < 1 || n > MaxDetTable::kMaxOrder)
        throw CapacityError("search_maxdet supports orders 1..21");
    if (target <= 0) throw CapacityError("search target must be positive");
    if (budget.node_limit == 0 || budget.seconds <= 0.0)
        throw CapacityError("search budget must be positive");

    SearchOutcome out;
    if (n == 1) {
        if (target == 1) {
            out.matrix = SignMatrix::ones(1);
            out.best_abs_det = 1;
        }
        out.nodes_visited = 1;
        return out;
    }

    SearchState st;
    st.n = n;
    st.target = target;
    st.target_sq = static_cast<u128>(target) * static_cast<u128>(target);
    // Necessary pair condition: (n^2 - dot^2) * n^(n-2) >= target^2.
    {
        const double t2_over = static_cast<double>(st.target) * static_cast<double>(st.target) /
                               std::pow(static_cast<double>(n), n - 2);
        const double dot2 = static_cast<double>(n) * n - t2_over;
        st.pair_dot_max = (dot2 <= 0.0) ? 0 : static_cast<int64_t>(std::sqrt(dot2) + 1e-9);
    }
    st.node_limit = budget.node_limit;
    st.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.seconds));
    st.row_masks.assign(n, 0);
    st.gram.assign(static_cast<size_t>(n) * n, 0);
    st.gram[0] = n; // row 0 is all +1
    dfs(st, 1);

    out.nodes_visited = st.nodes;
    out.best_abs_det = st.best_abs;
    out.budget_exhausted = st.out_of_budget;
    if (st.found) out.matrix = SignMatrix::from_minus_masks(n, st.solution);
    return out;
}

} // namespace minors
