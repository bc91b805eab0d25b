#include "minors/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <thread>

#include "minors/binomial.hpp"
#include "minors/colex.hpp"
#include "minors/determinant.hpp"
#include "minors/rng.hpp"

namespace minors {

namespace {

u128 u128_pow(uint64_t base, int exp) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

double u128_to_double(u128 v) {
    return std::ldexp(static_cast<double>(static_cast<uint64_t>(v >> 64)), 64) +
           static_cast<double>(static_cast<uint64_t>(v));
}

} // namespace

DepthReport depth_report(const MinorProfile& profile, const MaxDetTable& maxdet,
                         const SpectrumTable& spectra) {
    const int n = profile.order();
    DepthReport report;
    report.n = n;
    for (int m = 1; m <= n; ++m)
        if (!profile.has_order(m))
            throw CapacityError("depth_report needs a profile complete over orders 1..n");

    for (int m = 1; m <= n; ++m) {
        OrderFlags flags;
        flags.m = m;
        const auto vals = profile.value_set(m);
        if (m <= MaxDetTable::kMaxOrder) {
            flags.attains_maxdet =
                std::binary_search(vals.begin(), vals.end(), maxdet.delta(m));
        }
        if (m <= SpectrumTable::kMaxOrder)
            flags.full_spectrum = (vals == spectra.spectrum(m));
        report.orders.push_back(flags);

        if (m < n && flags.attains_maxdet) report.m_d = m;
        if (flags.full_spectrum.value_or(false)) report.m_f = m;
    }
    report.d = n - report.m_d;
    return report;
}

MeanSquareReport mean_square_report(const MinorProfile& profile) {
    const int n = profile.order();
    MeanSquareReport report;
    report.n = n;
    report.all_r_upper_one = true;
    for (int m = 1; m <= n; ++m) {
        if (!profile.has_order(m))
            throw CapacityError("mean_square_report needs a profile complete over orders 1..n");
        MeanSquareRow row;
        row.m = m;
        row.sum_squares = profile.counts(m).sum_squares;
        row.pair_count = binomial(n, m) * binomial(n, m);

        u128 num = row.sum_squares;
        u128 den = row.pair_count;
        const u128 g = gcd_u128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        row.e_num = num;
        row.e_den = static_cast<uint64_t>(den);
        row.e = u128_to_double(row.sum_squares) / static_cast<double>(row.pair_count);

        double mfact = 1.0;
        for (int i = 2; i <= m; ++i) mfact *= i;
        row.r_lower = row.e / mfact;

        // R_H = E * C(n,m) / n^m = sum_squares / (C(n,m) * n^m), exact in 128 bits.
        const u128 upper_den = u128_pow(static_cast<uint64_t>(n), m) * binomial(n, m);
        row.r_upper = u128_to_double(row.sum_squares) / u128_to_double(upper_den);
        row.r_upper_is_one = (row.sum_squares == upper_den);
        if (m >= 2 && !row.r_upper_is_one) report.all_r_upper_one = false;

        report.rows.push_back(row);
    }
    return report;
}

std::string format_ratio(double v) {
    char buf[64];
    if (v >= 9999.5) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.4g", v);
    }
    return buf;
}

std::string format_upper_ratio(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

uint64_t vanishing_count(const MinorProfile& profile, int m) {
    const auto& values = profile.counts(m).values;
    const auto it = values.find(0);
    return it == values.end() ? 0 : it->second;
}

uint64_t predicted_z2(int n) {
    const uint64_t nn = static_cast<uint64_t>(n);
    return nn * nn * (nn - 1) * (nn - 2) / 8;
}

uint64_t predicted_z3(int n) {
    const u128 nn = static_cast<u128>(n);
    const u128 v = nn * nn * (nn - 1) * (nn - 2) * (nn - 4) * (5 * nn - 4) / 288;
    return static_cast<uint64_t>(v);
}

namespace {

i128 i128_pow(int64_t base, int exp) {
    i128 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// One complementary pair: |det H[R,C]| must equal n^(m-n/2) |det H[Rc,Cc]|
// and respect the table bound n^(m-n/2) D(n-m).
bool check_pair(const SignMatrix& h, const MaxDetTable& maxdet, const Selector& sel,
                SzollosiResult& result) {
    const int n = h.order();
    const int m = sel.size();
    const int d = n - m;
    const Selector comp = complement_selector(sel, n);
    const int64_t det_m = det_submatrix_exact(h, sel.rows, sel.cols);
    const int64_t det_d = (d == 0) ? 1 : det_submatrix_exact(h, comp.rows, comp.cols);
    const i128 lhs = static_cast<i128>(std::llabs(det_m));
    const i128 scale = i128_pow(n, m - n / 2);
    const bool pair_ok = lhs == scale * std::llabs(det_d);
    bool bound_ok = true;
    if (d >= 1 && d <= MaxDetTable::kMaxOrder)
        bound_ok = lhs <= scale * maxdet.d(d);
    ++result.pairs_checked;
    if (!pair_ok || !bound_ok) {
        result.ok = false;
        result.violation = SzollosiViolation{sel.rows, sel.cols, det_m, det_d};
        return false;
    }
    return true;
}

} // namespace

SzollosiResult szollosi_check(const SignMatrix& h, const MaxDetTable& maxdet) {
    const int n = h.order();
    if (n > 12) throw CapacityError("exhaustive szollosi_check supports orders <= 12");
    if (!is_hadamard(h)) throw CapacityError("szollosi_check requires a Hadamard matrix");
    SzollosiResult result;
    for (int m = (n + 1) / 2; m <= n; ++m) {
        Selector sel;
        sel.rows.resize(m);
        sel.cols.resize(m);
        for (int i = 0; i < m; ++i) sel.rows[i] = i;
        do {
            for (int i = 0; i < m; ++i) sel.cols[i] = i;
            do {
                if (!check_pair(h, maxdet, sel, result)) return result;
            } while (next_colex(std::span<int>(sel.cols), n));
        } while (next_colex(std::span<int>(sel.rows), n));
    }
    return result;
}

SzollosiResult szollosi_check_sampled(const SignMatrix& h, const MaxDetTable& maxdet,
                                      uint64_t samples, uint64_t seed) {
    const int n = h.order();
    if (!is_hadamard(h)) throw CapacityError("szollosi_check requires a Hadamard matrix");
    SzollosiResult result;
    Xoshiro256 rng(seed);
    for (uint64_t s = 0; s < samples; ++s) {
        const int m = n / 2 + static_cast<int>(rng.next_below(n - n / 2 + 1));
        Selector sel;
        // random size-m subsets via colex unranking of random ranks
        sel.rows = colex_unrank(rng.next_below(binomial(n, m)), m, n);
        sel.cols = colex_unrank(rng.next_below(binomial(n, m)), m, n);
        if (!check_pair(h, maxdet, sel, result)) return result;
    }
    return result;
}

bool cohn_check(const MinorProfile& profile) {
    const int n = profile.order();
    for (int m = n / 2 + 1; m < n; ++m) {
        const bool hadamard_order = (m == 1 || m == 2 || m % 4 == 0);
        if (!hadamard_order) continue;
        // raw m^(m/2) corresponds to normalized m^(m/2) / 2^(m-1)
        u128 raw = 1;
        for (int i = 0; i < m / 2; ++i) raw *= static_cast<unsigned>(m);
        if (m % 2 == 1) continue; // m^(m/2) not an integer, cannot occur
        const u128 target = raw >> (m - 1);
        if ((target << (m - 1)) != raw) continue;
        const auto& values = profile.counts(m).values;
        if (values.count(static_cast<uint64_t>(target)) != 0) return false;
    }
    return true;
}

RandomModelHistogram random_model(int m, uint64_t samples, uint64_t seed, int workers) {
    if (m < 1 || m > kDetExactMaxOrder)
        throw CapacityError("random_model supports orders 1..21");
    RandomModelHistogram hist;
    hist.m = m;
    hist.samples = samples;
    hist.seed = seed;
    hist.generator = Xoshiro256::kName;

    workers = std::max(1, workers);
    const uint64_t per = samples / workers;

    struct Shard {
        std::map<uint64_t, uint64_t> counts;
        uint64_t even = 0;
    };
    std::vector<Shard> shards(workers);

    auto run_shard = [m](uint64_t shard_samples, uint64_t shard_seed_value, Shard& out) {
        Xoshiro256 rng(shard_seed_value);
        std::vector<int64_t> buf(static_cast<size_t>(m) * m);
        for (uint64_t s = 0; s < shard_samples; ++s) {
            for (int i = 0; i < m; ++i) {
                const uint64_t word = rng.next(); // one word per row, bit j = column j
                for (int j = 0; j < m; ++j)
                    buf[static_cast<size_t>(i) * m + j] = (word >> j) & 1 ? -1 : 1;
            }
            const int64_t det = det_exact_inplace(std::span(buf), m);
            const uint64_t normalized = static_cast<uint64_t>(std::llabs(det)) >> (m - 1);
            out.counts[normalized] += 1;
            if ((normalized & 1) == 0) out.even += 1;
        }
    };

    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        const uint64_t count = (w == workers - 1) ? samples - per * (workers - 1) : per;
        threads.emplace_back(run_shard, count, shard_seed(seed, static_cast<uint64_t>(w)),
                             std::ref(shards[w]));
    }
    for (auto& t : threads) t.join();

    for (const Shard& shard : shards) {
        for (const auto& [v, c] : shard.counts) hist.counts[v] += c;
        hist.even_count += shard.even;
    }
    return hist;
}

double even_limit_constant() {
    double prod = 1.0;
    for (int k = 1;; ++k) {
        const double factor = 1.0 - std::ldexp(1.0, -k);
        prod *= factor;
        if (std::ldexp(1.0, -k) < std::ldexp(1.0, -60)) break;
    }
    return 1.0 - prod;
}

int gcd_power_of_k(const MinorProfile& profile, int m, int k) {
    if (k < 2) return 0;
    uint64_t g = 0;
    for (const auto& [v, mult] : profile.counts(m).values) {
        (void)mult;
        if (v == 0) continue;
        g = g == 0 ? v : std::gcd(g, v);
    }
    if (g == 0) return 0;
    int alpha = 0;
    while (g % static_cast<uint64_t>(k) == 0) {
        g /= static_cast<uint64_t>(k);
        ++alpha;
    }
    return alpha;
}

} // namespace minors
