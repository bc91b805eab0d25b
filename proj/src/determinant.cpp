#include "minors/determinant.hpp"

#include <cmath>
#include <cstring>

#include "minors/int128.hpp"

namespace minors {

int64_t det_exact_inplace(std::span<int64_t> m, int n) {
    auto at = [&](int i, int j) -> int64_t& { return m[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    int64_t prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                const i128 num =
                    static_cast<i128>(at(k, k)) * at(i, j) - static_cast<i128>(at(i, k)) * at(k, j);
                at(i, j) = static_cast<int64_t>(num / prev); // exact division (Bareiss)
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

int64_t det_exact(const SignMatrix& a) {
    const int n = a.order();
    if (n > kDetExactMaxOrder)
        throw CapacityError("det_exact supports orders <= " + std::to_string(kDetExactMaxOrder));
    int64_t buf[kDetExactMaxOrder * kDetExactMaxOrder];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) buf[i * n + j] = a.entry(i, j);
    return det_exact_inplace(std::span<int64_t>(buf, static_cast<size_t>(n) * n), n);
}

int64_t det_submatrix_exact(const SignMatrix& a, std::span<const int> rows,
                            std::span<const int> cols) {
    const int m = static_cast<int>(rows.size());
    if (m > kDetExactMaxOrder)
        throw CapacityError("det_submatrix_exact supports orders <= " +
                            std::to_string(kDetExactMaxOrder));
    int64_t buf[kDetExactMaxOrder * kDetExactMaxOrder];
    for (int i = 0; i < m; ++i) {
        const int8_t* row = a.row(rows[i]);
        for (int j = 0; j < m; ++j) buf[i * m + j] = row[cols[j]];
    }
    return det_exact_inplace(std::span<int64_t>(buf, static_cast<size_t>(m) * m), m);
}

namespace detail {

int64_t float_det_guarded_inplace(double* a, int m) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * m + j]; };
    double det = 1.0;
    for (int k = 0; k < m; ++k) {
        int pivot = k;
        double best = std::fabs(at(k, k));
        for (int i = k + 1; i < m; ++i) {
            const double v = std::fabs(at(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) {
            det = 0.0;
            break;
        }
        if (pivot != k) {
            for (int j = k; j < m; ++j) std::swap(at(k, j), at(pivot, j));
            det = -det;
        }
        det *= at(k, k);
        const double inv = 1.0 / at(k, k);
        for (int i = k + 1; i < m; ++i) {
            const double factor = at(i, k) * inv;
            if (factor == 0.0) continue;
            for (int j = k + 1; j < m; ++j) at(i, j) -= factor * at(k, j);
            at(i, k) = 0.0;
        }
    }
    const double scale = std::ldexp(1.0, -(m - 1)); // 2^-(m-1)
    const double scaled = det * scale;
    const double rounded = std::nearbyint(scaled);
    if (std::fabs(scaled - rounded) > 0.125)
        throw RoundingHazardError("scaled determinant " + std::to_string(scaled) +
                                  " too far from an integer");
    return static_cast<int64_t>(rounded) * (int64_t{1} << (m - 1));
}

} // namespace detail

int64_t det_float_guarded(const SignMatrix& a) {
    const int m = a.order();
    if (m > kDetFloatMaxOrder)
        throw CapacityError("det_float_guarded supports orders <= " +
                            std::to_string(kDetFloatMaxOrder));
    double buf[kDetFloatMaxOrder * kDetFloatMaxOrder];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) buf[i * m + j] = a.entry(i, j);
    return detail::float_det_guarded_inplace(buf, m);
}

int64_t det_submatrix_float_guarded(const SignMatrix& a, std::span<const int> rows,
                                    std::span<const int> cols) {
    const int m = static_cast<int>(rows.size());
    if (m > kDetFloatMaxOrder)
        throw CapacityError("det_submatrix_float_guarded supports orders <= " +
                            std::to_string(kDetFloatMaxOrder));
    double buf[kDetFloatMaxOrder * kDetFloatMaxOrder];
    for (int i = 0; i < m; ++i) {
        const int8_t* row = a.row(rows[i]);
        for (int j = 0; j < m; ++j) buf[i * m + j] = row[cols[j]];
    }
    return detail::float_det_guarded_inplace(buf, m);
}

bool det_parity_even_gf2(const SignMatrix& a) {
    const int m = a.order();
    if (m == 1) return false; // normalized value is 1
    // Clear first row/column signs; the inner (m-1)x(m-1) 0/1 pattern C with
    // C[i][j] = (1 - a'[i][j])/2 satisfies |det a| = 2^(m-1) |det C|.
    // Normalized parity == det(C) mod 2 == (C nonsingular over GF(2) ? 1 : 0).
    uint32_t rows[SignMatrix::kMaxOrder - 1];
    for (int i = 1; i < m; ++i) {
        uint32_t bits = 0;
        const int8_t* row = a.row(i);
        const int8_t* row0 = a.row(0);
        const int rsign = row[0] * row0[0];
        for (int j = 1; j < m; ++j) {
            const int v = row[j] * row0[j] * rsign; // sign-cleared entry
            if (v < 0) bits |= (1u << (j - 1));
        }
        rows[i - 1] = bits;
    }
    // GF(2) elimination
    const int dim = m - 1;
    int rank = 0;
    for (int col = 0; col < dim && rank < dim; ++col) {
        int pivot = -1;
        for (int i = rank; i < dim; ++i)
            if (rows[i] & (1u << col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) return true; // singular over GF(2) -> even
        std::swap(rows[rank], rows[pivot]);
        for (int i = rank + 1; i < dim; ++i)
            if (rows[i] & (1u << col)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank < dim;
}

} // namespace minors
