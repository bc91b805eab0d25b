#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "minors/minor_profile.hpp"
#include "minors/sign_matrix.hpp"

namespace minors {

/// Called once per enumerated minor with the selected rows/cols (ascending)
/// and the signed determinant.
using MinorVisitor =
    std::function<void(std::span<const int> rows, std::span<const int> cols, int64_t det)>;

/// Called periodically with (row combinations processed, total) per order.
using ProgressFn = std::function<void(int order, uint64_t done, uint64_t total)>;

struct EnumerateOptions {
    int workers = 1;
    /// Cap on the Laplace level arrays (all workers combined).
    size_t max_level_bytes = size_t{1} << 30;
    /// Streams (rows, cols, det) triples; forces single-threaded execution.
    MinorVisitor visitor;
    ProgressFn progress;
};

/// All minor orders 1..n.
std::vector<int> all_orders(int n);

/// Work estimate for Algorithm A: sum over k of C(n,k)^2 * k^3/3.
double algA_cost_estimate(int n, std::span<const int> orders);

/// Algorithm A: evaluate every submatrix determinant independently by
/// guarded floating-point Gaussian elimination with partial pivoting.
/// Matrix order <= 25.
MinorProfile enumerate_minors_algA(const SignMatrix& a, std::span<const int> orders);

/// Algorithm D: for each combination of k rows, build all order-j minors of
/// the last j rows by signed Laplace expansion over column subsets in colex
/// order, keeping only levels j-1 and j. Orders <= 21; peak level storage is
/// 2*C(n, floor(n/2)) words per worker.
MinorProfile enumerate_minors_algD(const SignMatrix& a, std::span<const int> orders,
                                   const EnumerateOptions& opts = {});

namespace detail {
/// Laplace level arrays for one row selection: result[j-1][r] is the
/// determinant of the submatrix on the last j rows of a[rows, :] and the
/// column subset of colex rank r. Exposed for the recurrence tests.
std::vector<std::vector<int64_t>> laplace_levels(const SignMatrix& a, std::span<const int> rows);
} // namespace detail

} // namespace minors
