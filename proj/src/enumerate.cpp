#include "minors/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <unordered_map>

#include "minors/binomial.hpp"
#include "minors/colex.hpp"
#include "minors/determinant.hpp"

namespace minors {

namespace {

// Upper bound (Hadamard) on the normalized value of an order-m minor,
// used to pick dense vs hash accumulation.
uint64_t normalized_ceiling(int m) {
    const double raw = std::pow(static_cast<double>(m), m / 2.0);
    return static_cast<uint64_t>(std::ldexp(raw, -(m - 1))) + 2;
}

constexpr uint64_t kDenseLimit = uint64_t{1} << 22;

class ValueAccumulator {
public:
    explicit ValueAccumulator(int m) {
        const uint64_t ceiling = normalized_ceiling(m);
        dense_ = ceiling <= kDenseLimit;
        if (dense_) dense_counts_.assign(ceiling + 1, 0);
    }

    void add(uint64_t normalized) {
        if (dense_) {
            dense_counts_[normalized] += 1;
        } else {
            sparse_[normalized] += 1;
        }
    }

    void drain_into(OrderCounts& out, int m) const {
        if (dense_) {
            for (uint64_t v = 0; v < dense_counts_.size(); ++v)
                if (dense_counts_[v] != 0) out.values[v] += dense_counts_[v];
        } else {
            for (const auto& [v, mult] : sparse_) out.values[v] += mult;
        }
        // sum_squares from the multiplicities: every minor with normalized
        // value v contributes (v * 2^(m-1))^2.
        u128 ss = 0;
        for (const auto& [v, mult] : out.values) {
            const u128 term = static_cast<u128>(v) * v * mult;
            ss += term << (2 * (m - 1));
        }
        out.sum_squares = ss;
    }

private:
    bool dense_;
    std::vector<uint64_t> dense_counts_;
    std::unordered_map<uint64_t, uint64_t> sparse_;
};

std::vector<int> checked_orders(int n, std::span<const int> orders, int max_order) {
    std::vector<int> out(orders.begin(), orders.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw CapacityError("no minor orders requested");
    if (out.front() < 1 || out.back() > n)
        throw CapacityError("minor orders must lie in [1, n]");
    if (out.back() > max_order)
        throw CapacityError("minor orders above " + std::to_string(max_order) +
                            " are not supported by this algorithm");
    return out;
}

// ---- Algorithm D ----

struct LevelWorkspace {
    std::vector<int64_t> prev;
    std::vector<int64_t> cur;
};

// Compute level arrays for rows R (size k) of A, feeding the final level to
// `sink`. Levels are indexed by colex rank of the column subset.
template <typename Sink>
void run_levels(const SignMatrix& a, std::span<const int> rows, LevelWorkspace& ws, Sink&& sink) {
    const int n = a.order();
    const int k = static_cast<int>(rows.size());

    // Level 1: entries of the bottom selected row.
    ws.cur.resize(n);
    {
        const int8_t* row = a.row(rows[k - 1]);
        for (int c = 0; c < n; ++c) ws.cur[c] = row[c];
    }
    if (k == 1) {
        for (int c = 0; c < n; ++c) sink(static_cast<uint64_t>(c), ws.cur[c]);
        return;
    }

    int subset[SignMatrix::kMaxOrder];
    uint64_t pre[SignMatrix::kMaxOrder + 1];
    uint64_t suf[SignMatrix::kMaxOrder + 1];

    for (int j = 2; j <= k; ++j) {
        std::swap(ws.prev, ws.cur);
        const uint64_t count = binomial(n, j);
        const bool final_level = (j == k);
        if (!final_level) ws.cur.resize(count); // the final level is streamed, not stored
        const int8_t* row = a.row(rows[k - j]); // topmost of the last j rows
        for (int i = 0; i < j; ++i) subset[i] = i;
        uint64_t rank = 0;
        do {
            // Removal ranks: rank_{j-1}(S \ c_t) = pre[t] + suf[t+1] where
            // pre accumulates C(c_i, i+1) for i < t and suf accumulates
            // C(c_i, i) for i >= t.
            pre[0] = 0;
            for (int t = 0; t < j; ++t) pre[t + 1] = pre[t] + binomial(subset[t], t + 1);
            suf[j] = 0;
            for (int t = j - 1; t >= 0; --t) suf[t] = suf[t + 1] + binomial(subset[t], t);
            int64_t det = 0;
            for (int t = 0; t < j; ++t) {
                const int64_t sub = ws.prev[pre[t] + suf[t + 1]];
                const int64_t term = (row[subset[t]] > 0) ? sub : -sub;
                det += (t & 1) ? -term : term;
            }
            if (final_level) {
                sink(rank, det);
            } else {
                ws.cur[rank] = det;
            }
            ++rank;
        } while (next_colex(std::span<int>(subset, j), n));
        assert(rank == count);
        (void)count;
    }
}

struct AlgDChunk {
    int k;
    uint64_t row_rank_lo;
    uint64_t row_rank_hi;
};

void algD_worker(const SignMatrix& a, const AlgDChunk& chunk, ValueAccumulator& acc,
                 const MinorVisitor& visitor, std::atomic<uint64_t>* progress_counter) {
    const int n = a.order();
    const int k = chunk.k;
    LevelWorkspace ws;
    std::vector<int> rows = colex_unrank(chunk.row_rank_lo, k, n);
    std::vector<int> cols(k);

    const int shift = k - 1;
    for (uint64_t r = chunk.row_rank_lo; r < chunk.row_rank_hi; ++r) {
        if (visitor) {
            run_levels(a, rows, ws, [&](uint64_t col_rank, int64_t det) {
                const uint64_t normalized = static_cast<uint64_t>(std::llabs(det)) >> shift;
                acc.add(normalized);
                cols = colex_unrank(col_rank, k, n);
                visitor(rows, cols, det);
            });
        } else {
            run_levels(a, rows, ws, [&](uint64_t, int64_t det) {
                acc.add(static_cast<uint64_t>(std::llabs(det)) >> shift);
            });
        }
        if (progress_counter) progress_counter->fetch_add(1, std::memory_order_relaxed);
        if (r + 1 < chunk.row_rank_hi) next_colex(std::span<int>(rows), n);
    }
}

// ---- Algorithm A ----

void algA_order(const SignMatrix& a, int k, ValueAccumulator& acc) {
    const int n = a.order();
    std::vector<int> rows(k), cols(k);
    const int shift = k - 1;
    for (int i = 0; i < k; ++i) rows[i] = i;
    do {
        for (int i = 0; i < k; ++i) cols[i] = i;
        do {
            const int64_t det = det_submatrix_float_guarded(a, rows, cols);
            acc.add(static_cast<uint64_t>(std::llabs(det)) >> shift);
        } while (next_colex(std::span<int>(cols), n));
    } while (next_colex(std::span<int>(rows), n));
}

} // namespace

std::vector<int> all_orders(int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = i + 1;
    return out;
}

double algA_cost_estimate(int n, std::span<const int> orders) {
    double total = 0;
    for (int k : orders) {
        const double c = static_cast<double>(binomial(n, k));
        total += c * c * k * k * k / 3.0;
    }
    return total;
}

MinorProfile enumerate_minors_algA(const SignMatrix& a, std::span<const int> orders) {
    const int n = a.order();
    if (n > kDetFloatMaxOrder)
        throw CapacityError("Algorithm A supports orders <= " + std::to_string(kDetFloatMaxOrder));
    const std::vector<int> ks = checked_orders(n, orders, kDetFloatMaxOrder);
    MinorProfile profile(n);
    for (int k : ks) {
        ValueAccumulator acc(k);
        algA_order(a, k, acc);
        acc.drain_into(profile.counts_mutable(k), k);
    }
    return profile;
}

MinorProfile enumerate_minors_algD(const SignMatrix& a, std::span<const int> orders,
                                   const EnumerateOptions& opts) {
    const int n = a.order();
    const std::vector<int> ks = checked_orders(n, orders, kDetExactMaxOrder);

    int workers = std::max(1, opts.workers);
    if (opts.visitor) workers = 1; // visitor streams from a single thread

    // Peak level storage: two arrays of up to C(n, j) int64 words each, where
    // j is the largest requested order clamped to the widest level n/2.
    const int peak_level = std::min(ks.back(), n / 2 + (n & 1));
    const uint64_t peak_words = 2 * binomial(n, peak_level);
    if (static_cast<size_t>(workers) * peak_words * sizeof(int64_t) > opts.max_level_bytes)
        throw CapacityError("level arrays would exceed the configured memory cap");

    MinorProfile profile(n);
    for (int k : ks) {
        const uint64_t total = binomial(n, k);
        const int w = static_cast<int>(std::min<uint64_t>(workers, total));
        std::vector<ValueAccumulator> accs;
        accs.reserve(w);
        for (int i = 0; i < w; ++i) accs.emplace_back(k);

        std::atomic<uint64_t> done{0};
        std::vector<std::thread> threads;
        for (int i = 0; i < w; ++i) {
            const uint64_t lo = total * i / w;
            const uint64_t hi = total * (i + 1) / w;
            threads.emplace_back([&, i, lo, hi] {
                AlgDChunk chunk{k, lo, hi};
                algD_worker(a, chunk, accs[i], w == 1 ? opts.visitor : nullptr,
                            opts.progress ? &done : nullptr);
            });
        }
        if (opts.progress) {
            uint64_t d;
            do {
                d = done.load(std::memory_order_relaxed);
                opts.progress(k, d, total);
                if (d < total) std::this_thread::sleep_for(std::chrono::milliseconds(200));
            } while (d < total);
        }
        for (auto& t : threads) t.join();

        OrderCounts& out = profile.counts_mutable(k);
        for (const ValueAccumulator& acc : accs) acc.drain_into(out, k);
    }
    return profile;
}

namespace detail {

std::vector<std::vector<int64_t>> laplace_levels(const SignMatrix& a, std::span<const int> rows) {
    const int n = a.order();
    const int k = static_cast<int>(rows.size());
    std::vector<std::vector<int64_t>> levels(k);
    // Recompute each level as a final level of the suffix row set.
    for (int j = 1; j <= k; ++j) {
        levels[j - 1].resize(binomial(n, j));
        LevelWorkspace ws;
        std::vector<int> suffix(rows.end() - j, rows.end());
        run_levels(a, suffix, ws,
                   [&](uint64_t rank, int64_t det) { levels[j - 1][rank] = det; });
    }
    return levels;
}

} // namespace detail

} // namespace minors
