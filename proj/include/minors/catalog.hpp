#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minors/sign_matrix.hpp"

namespace minors {

/// Known maximal determinants of {+1,-1} matrices, orders 1..21.
/// delta(n) = D(n) / 2^(n-1) is the normalized form.
class MaxDetTable {
public:
    static constexpr int kMaxOrder = 21;

    static const MaxDetTable& instance();

    uint64_t delta(int n) const;
    int64_t d(int n) const; // delta(n) * 2^(n-1)

private:
    MaxDetTable();
    std::vector<uint64_t> delta_;
};

/// Achievable normalized |det| values of {+1,-1} matrices, orders 1..11.
class SpectrumTable {
public:
    static constexpr int kMaxOrder = 11;

    static const SpectrumTable& instance();

    /// Sorted set of achievable |det|/2^(n-1) values.
    const std::vector<uint64_t>& spectrum(int n) const;

private:
    SpectrumTable();
    std::vector<std::vector<uint64_t>> sets_;
};

/// Recompute the spectrum of order n by brute force over all sign-normalized
/// matrices (equivalently all (n-1)x(n-1) 0/1 matrices). Practical for n <= 6.
std::vector<uint64_t> spectrum_brute_force(int n);

/// Sylvester doubling construction, order 2^k, k <= 5.
SignMatrix sylvester(int k);

/// Paley type-I construction, order q+1 for a prime q == 3 (mod 4),
/// q in {3, 7, 11, 19, 23}. First row and column all +1.
SignMatrix paley_hadamard(int q);

/// Kronecker product of two Hadamard matrices; Hadamard of order n1*n2.
SignMatrix kron(const SignMatrix& h1, const SignMatrix& h2);

/// Order-13 maximal-determinant matrix built from the (13,4,1) planar
/// difference set {0,1,3,9} mod 13; Gram matrix is 12I + J and
/// |det| = 5 * 12^6 = D(13). Normalized to +1 first row/column.
SignMatrix maxdet13();

struct SearchBudget {
    uint64_t node_limit = 50'000'000;
    double seconds = 60.0;
};

struct SearchOutcome {
    std::optional<SignMatrix> matrix; // present on success
    uint64_t nodes_visited = 0;
    int64_t best_abs_det = 0; // largest |det| seen at full depth
    bool budget_exhausted = false;
};

/// Depth-first branch-and-bound for a {+1,-1} matrix of order n with
/// |det| == target. First row/column fixed to +1, remaining rows chosen in
/// lexicographic bitmask order (ascending, deduplicated by sortedness), and
/// pruned with the Fischer bound det(G_k) * n^(n-k) >= target^2 on the
/// partial Gram matrix G_k. Deterministic for a given budget.
SearchOutcome search_maxdet(int n, int64_t target, const SearchBudget& budget);

/// The Fischer pruning bound: an upper bound on det(A)^2 over all
/// completions of the k rows whose Gram matrix (including self-products n on
/// the diagonal) is `gram`. Exposed for the bound-soundness tests.
double search_completion_bound(std::span<const int64_t> gram, int k, int n);

} // namespace minors
