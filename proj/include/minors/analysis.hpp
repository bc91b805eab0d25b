#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "minors/catalog.hpp"
#include "minors/minor_profile.hpp"
#include "minors/sign_matrix.hpp"

namespace minors {

/// Per-order verdicts: does the order attain its maximal determinant, and
/// does it realize the full spectrum (unknown above order 11)?
struct OrderFlags {
    int m = 0;
    bool attains_maxdet = false;
    std::optional<bool> full_spectrum; // nullopt when the spectrum is unknown
};

struct DepthReport {
    int n = 0;
    int m_d = 0; // largest m < n whose minors attain delta(m); 0 for n == 1
    int d = 0;   // n - m_d
    int m_f = 0; // largest m with the full spectrum of values (m <= 11)
    std::vector<OrderFlags> orders;
};

/// Requires a profile complete over orders 1..n.
DepthReport depth_report(const MinorProfile& profile, const MaxDetTable& maxdet,
                         const SpectrumTable& spectra);

struct MeanSquareRow {
    int m = 0;
    u128 sum_squares = 0;
    uint64_t pair_count = 0; // C(n,m)^2
    // E = sum_squares / pair_count as an exact reduced rational.
    u128 e_num = 0;
    uint64_t e_den = 1;
    double e = 0.0;
    double r_lower = 0.0;    // E / m!
    double r_upper = 0.0;    // E * C(n,m) / n^m
    bool r_upper_is_one = false; // exact rational comparison
};

struct MeanSquareReport {
    int n = 0;
    std::vector<MeanSquareRow> rows; // m = 1..n
    bool all_r_upper_one = false;    // every 2 <= m <= n has R_H == 1 exactly
};

MeanSquareReport mean_square_report(const MinorProfile& profile);

/// Render a lower-bound ratio the way the reference tables print it: four
/// significant digits below 10^4, nearest integer above.
std::string format_ratio(double v);

/// Render an upper-bound ratio (always in [0,1]) with three decimals.
std::string format_upper_ratio(double v);

/// Number of vanishing minors of order m.
uint64_t vanishing_count(const MinorProfile& profile, int m);

/// Predicted counts of vanishing order-2/order-3 minors of a Hadamard
/// matrix of order n (n == 0 mod 4, or n in {1,2}).
uint64_t predicted_z2(int n);
uint64_t predicted_z3(int n);

struct SzollosiViolation {
    std::vector<int> rows, cols;
    int64_t det = 0;
    int64_t det_complement = 0;
};

struct SzollosiResult {
    bool ok = true;
    uint64_t pairs_checked = 0;
    std::optional<SzollosiViolation> violation;
};

/// Verify, for every (rows, cols) selector of size m >= n/2, the
/// complementary-minor identity |det H[R,C]| = n^(m-n/2) |det H[Rc,Cc]|
/// together with the upper bound |det H[R,C]| <= n^(m-n/2) D(n-m).
/// Exhaustive; order <= 12.
SzollosiResult szollosi_check(const SignMatrix& h, const MaxDetTable& maxdet);

/// Same identity on `samples` random selectors (sizes m chosen uniformly in
/// [n/2, n]); for orders too large to sweep exhaustively.
SzollosiResult szollosi_check_sampled(const SignMatrix& h, const MaxDetTable& maxdet,
                                      uint64_t samples, uint64_t seed);

/// True iff no order m in (n/2, n) contains a Hadamard submatrix, i.e. no
/// minor of raw value m^(m/2). Only m in {1,2} or m == 0 (mod 4) can ever
/// reach that value. Input profile must come from a Hadamard matrix.
bool cohn_check(const MinorProfile& profile);

struct RandomModelHistogram {
    int m = 0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::string generator; // fixed generator name, recorded for reproducibility
    std::map<uint64_t, uint64_t> counts; // normalized |det| -> count
    uint64_t even_count = 0;             // normalized value even
};

/// Histogram of normalized |det| over N random m x m {+1,-1} matrices.
/// Deterministic for a (seed, workers) pair; shards derive sub-seeds from
/// (seed, shard index).
RandomModelHistogram random_model(int m, uint64_t samples, uint64_t seed, int workers = 1);

/// 1 - prod_{k>=1} (1 - 2^-k): the limiting fraction of even normalized
/// determinants of random {0,1} matrices. Partial product truncated once the
/// factor is within 2^-60 of 1.
double even_limit_constant();

/// Largest exponent alpha such that k^alpha divides every nonzero normalized
/// value at order m (k = floor(n/4)); 0 when k < 2 or no nonzero values.
int gcd_power_of_k(const MinorProfile& profile, int m, int k);

} // namespace minors
