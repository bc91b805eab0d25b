#pragma once

#include <cstdint>
#include <span>

#include "minors/sign_matrix.hpp"

namespace minors {

/// Largest order for which the exact integer determinant of a {+1,-1}
/// matrix is overflow-safe in int64 (max |det| <= 21^10.5 < 2^63).
inline constexpr int kDetExactMaxOrder = 21;

/// Largest order for which the guarded floating-point determinant is allowed.
inline constexpr int kDetFloatMaxOrder = 25;

/// Exact signed determinant by fraction-free (Bareiss) elimination.
/// Intermediate entries are minors of the input, so they stay in int64;
/// cross products are formed in 128 bits.
int64_t det_exact(const SignMatrix& a);

/// Exact determinant of a general int64 matrix, destructive on `m`
/// (row-major n x n scratch). Caller guarantees intermediates fit int64.
int64_t det_exact_inplace(std::span<int64_t> m, int n);

/// Exact determinant of the submatrix a[rows, cols].
int64_t det_submatrix_exact(const SignMatrix& a, std::span<const int> rows,
                            std::span<const int> cols);

/// Determinant by Gaussian elimination with partial pivoting in 64-bit
/// floats, scaled by 2^(m-1) and rounded to the nearest integer. Throws
/// RoundingHazardError if the fractional part of the scaled value exceeds
/// 1/8 (never observed for orders <= 25).
int64_t det_float_guarded(const SignMatrix& a);

/// Like det_float_guarded for the submatrix a[rows, cols].
int64_t det_submatrix_float_guarded(const SignMatrix& a, std::span<const int> rows,
                                    std::span<const int> cols);

/// True iff the normalized minor |det|/2^(m-1) is even, by GF(2) rank of the
/// 0/1 matrix obtained after clearing the first row/column signs. Works for
/// any order; agrees with the parity of det_exact's normalized value.
bool det_parity_even_gf2(const SignMatrix& a);

namespace detail {
/// Guarded float determinant of an m x m buffer (destructive). Returns the
/// exact integer determinant; the buffer holds +-1 entries.
int64_t float_det_guarded_inplace(double* a, int m);
} // namespace detail

} // namespace minors
