#include "minors/bounds.hpp"

#include <cmath>
#include <mutex>

#include "minors/errors.hpp"

namespace minors {
namespace bounds {

namespace {
constexpr double kBisectTol = 1e-12;
constexpr double kLogTol = 1e-9; // tolerance band for log-space predicates
} // namespace

double f(double x) {
    if (x < 0.0 || x > 1.0) throw DomainError("f defined on [0,1]");
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

double f_derivative(double x) {
    if (x <= 0.0 || x >= 1.0) throw DomainError("f' defined on (0,1)");
    return 2.0 + std::log(x) + std::log1p(-x);
}

double x_max() {
    return (1.0 + std::sqrt(1.0 - 4.0 * std::exp(-2.0))) / 2.0;
}

double z_max() {
    return std::sqrt(1.0 - 4.0 * std::exp(-2.0));
}

double epsilon_closed(double z) {
    if (z <= 0.0 || z > z_max() + 1e-15) throw DomainError("epsilon defined on (0, z_max]");
    // log1p keeps the small-z cancellation at full absolute accuracy
    const double ratio_log = std::log1p(z) - std::log1p(-z);
    return 2.0 - ratio_log / z - std::log1p(-z * z);
}

double epsilon_series(double z) {
    if (z <= 0.0 || z > z_max() + 1e-15) throw DomainError("epsilon defined on (0, z_max]");
    const double z2 = z * z;
    double term = z2; // z^(2k)
    double sum = 0.0;
    for (int k = 1; k < 500; ++k) {
        const double contrib = term / (k * (2.0 * k + 1.0));
        sum += contrib;
        if (contrib < 1e-18 * sum) break;
        term *= z2;
    }
    return sum;
}

int64_t ExcludedInterval::order_lo() const {
    return static_cast<int64_t>(std::ceil(n * x0));
}

int64_t ExcludedInterval::order_hi() const {
    return static_cast<int64_t>(std::floor(n * x1));
}

namespace {

// Root of f(x) - threshold on [lo, hi] where f - threshold changes sign.
double bisect_f(double lo, double hi, double threshold) {
    double flo = f(lo) - threshold;
    for (int iter = 0; iter < 200 && hi - lo > kBisectTol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid) - threshold;
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

ExcludedInterval excluded_interval(int n) {
    if (n < 4) throw DomainError("excluded_interval requires n >= 4");
    ExcludedInterval out;
    out.n = n;
    out.threshold = 2.0 * std::log(n / 4.0) / n;
    const double xm = x_max();
    if (out.threshold >= f(xm)) {
        out.empty = true;
        return out;
    }
    out.empty = false;
    out.x0 = bisect_f(0.5, xm, out.threshold);
    out.x1 = bisect_f(xm, 1.0, out.threshold);
    return out;
}

bool ineq28_holds(int n) {
    if (n < 4) throw DomainError("ineq28 requires n >= 4");
    // log of ((n-3)/n)^(n-3) vs log of 27/(16n)
    const double lhs = (n - 3) * (std::log(static_cast<double>(n - 3)) - std::log(n));
    const double rhs = std::log(27.0 / 16.0) - std::log(n);
    return lhs <= rhs + kLogTol;
}

double lowerbound_D(int m) {
    if (m < 4) throw DomainError("lower bound stated for m >= 4");
    return 4.0 * std::pow(static_cast<double>(m), m / 2.0 - 1.0);
}

Corollary1Bound corollary1_bound(int n, int m, const MaxDetTable& maxdet) {
    if (m < (n + 1) / 2 || m > n) throw DomainError("corollary1_bound needs n/2 <= m <= n");
    const int d = n - m;
    if (d > MaxDetTable::kMaxOrder)
        throw CapacityError("corollary1_bound needs n - m <= 21 (table range)");
    Corollary1Bound out;
    const int64_t dd = (d == 0) ? 1 : maxdet.d(d);
    if (n % 2 == 0) {
        out.exact = true;
        u128 v = static_cast<u128>(dd);
        for (int i = 0; i < m - n / 2; ++i) v *= static_cast<unsigned>(n);
        out.value = v;
        out.log_value = (m - n / 2) * std::log(n) + std::log(static_cast<double>(dd));
    } else {
        out.exact = false;
        out.log_value = (m - n / 2.0) * std::log(n) + std::log(static_cast<double>(dd));
    }
    return out;
}

PrimeGapTable::PrimeGapTable(int sieve_limit) : limit_(sieve_limit) {
    if (sieve_limit < 3) throw DomainError("sieve limit must be >= 3");
    std::vector<bool> composite(sieve_limit + 1, false);
    for (int p = 2; p * p <= sieve_limit; ++p)
        if (!composite[p])
            for (int q = p * p; q <= sieve_limit; q += p) composite[q] = true;
    lambda_.assign(sieve_limit + 1, 0);
    int prev_prime = 2;
    int max_gap = 0;
    for (int v = 3; v <= sieve_limit; ++v) {
        if (!composite[v]) {
            max_gap = std::max(max_gap, v - prev_prime);
            prev_prime = v;
        }
        lambda_[v] = std::max(max_gap, 1);
    }
}

int PrimeGapTable::lambda(int n) const {
    if (n < 3 || n > limit_) throw CapacityError("lambda(n) outside the sieve limit");
    return lambda_[n];
}

int lambda_prime_gap(int n) {
    if (n < 3) throw DomainError("lambda(n) requires n >= 3");
    if (n > 1'000'000) throw CapacityError("lambda(n) supported up to 10^6");
    static PrimeGapTable table(1'000'000);
    return table.lambda(n);
}

bool theorem3_inequality(int n, int m) {
    if (n < 4 || m < 1 || m > n) throw DomainError("theorem3_inequality needs 1 <= m <= n, n >= 4");
    const int d = n - m;
    const double lam = lambda_prime_gap(std::max(3, n / 2));
    const double lhs = 0.5 * m * std::log(static_cast<double>(m)) +
                       0.5 * lam * (std::log(4.0) - std::log(static_cast<double>(n)) - 1.0);
    const double rhs = (m - n / 2.0) * std::log(static_cast<double>(n)) +
                       (d > 0 ? 0.5 * d * std::log(static_cast<double>(d)) : 0.0);
    return lhs <= rhs + kLogTol;
}

} // namespace bounds
} // namespace minors
