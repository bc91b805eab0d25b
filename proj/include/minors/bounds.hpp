#pragma once

#include <cstdint>
#include <vector>

#include "minors/catalog.hpp"
#include "minors/int128.hpp"

namespace minors {
namespace bounds {

/// f(x) = x ln x - (1-x) ln(1-x) on (0,1), 0 at the endpoints.
double f(double x);

/// f'(x) = 2 + ln x + ln(1-x).
double f_derivative(double x);

/// The unique maximum of f in (1/2, 1): (1 + sqrt(1 - 4/e^2)) / 2.
double x_max();

/// 2 x_max - 1 = sqrt(1 - 4/e^2).
double z_max();

/// eps(z) = 2 - (1/z) ln((1+z)/(1-z)) - ln(1-z^2), for z in (0, z_max].
double epsilon_closed(double z);

/// Series form sum_{k>=1} z^(2k) / (k(2k+1)); agrees with the closed form
/// to 1e-10 across the domain.
double epsilon_series(double z);

struct ExcludedInterval {
    int n = 0;
    double threshold = 0.0; // 2 ln(n/4) / n
    bool empty = true;      // true when threshold >= f(x_max)
    double x0 = 0.0, x1 = 0.0;

    /// Integer order range excluded for submatrix orders: [ceil(n*x0), floor(n*x1)].
    int64_t order_lo() const;
    int64_t order_hi() const;
};

/// The interval (x0, x1) in (1/2, 1) where f exceeds 2 ln(n/4)/n, found by
/// bisection on each side of x_max to 1e-12; empty for n <= 28.
ExcludedInterval excluded_interval(int n);

/// ((n-3)/n)^(n-3) <= 27/(16 n); holds exactly for n < 29.
bool ineq28_holds(int n);

/// Lower bound 4 m^(m/2-1) on the maximal determinant, m >= 4.
double lowerbound_D(int m);

struct Corollary1Bound {
    bool exact = false; // integer evaluation (n even)
    u128 value = 0;     // when exact
    double log_value = 0.0; // natural log of the bound, always valid
};

/// Upper bound n^(m-n/2) D(n-m) on |det| of an m x m submatrix of a
/// Hadamard matrix of order n, for n/2 <= m <= n and n-m <= 21.
Corollary1Bound corollary1_bound(int n, int m, const MaxDetTable& maxdet);

/// Maximum gap between consecutive primes within [2, n]; n >= 3.
class PrimeGapTable {
public:
    explicit PrimeGapTable(int sieve_limit);
    int limit() const { return limit_; }
    int lambda(int n) const;

private:
    int limit_;
    std::vector<int> lambda_; // lambda_[n] for n in [3, limit]
};

/// lambda(n) through a shared table (sieve limit grows on demand up to 10^6).
int lambda_prime_gap(int n);

/// The replacement inequality behind the unconditional excluded-interval
/// theorem: m^(m/2) (4/(ne))^(lambda(n/2)/2) <= n^(m-n/2) d^(d/2), d = n-m,
/// evaluated in log space.
bool theorem3_inequality(int n, int m);

} // namespace bounds
} // namespace minors
