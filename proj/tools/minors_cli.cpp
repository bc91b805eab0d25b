// Command-line front end: enumerate minors of {+1,-1} matrices, analyze the
// results, evaluate the excluded-interval bounds, and run verification
// suites. See README.md for usage examples.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "minors/analysis.hpp"
#include "minors/bounds.hpp"
#include "minors/catalog.hpp"
#include "minors/determinant.hpp"
#include "minors/enumerate.hpp"
#include "minors/report.hpp"
#include "minors/rng.hpp"

namespace {

using namespace minors;

constexpr int kExitFailure = 1;      // verification failure
constexpr int kExitBadInput = 2;     // parse/capacity/domain errors
constexpr int kExitRoundingHazard = 3;

struct SourceFlags {
    std::string file;
    std::string construct; // NAME:ARG
    int search_order = 0;
    double budget_seconds = 60.0;
};

void add_source_flags(CLI::App* cmd, SourceFlags& src) {
    cmd->add_option("--file", src.file, "matrix file (order line, then +/- rows)");
    cmd->add_option("--construct", src.construct,
                    "construction NAME:ARG (sylvester:K, paley:Q, maxdet:13)");
    cmd->add_option("--search", src.search_order,
                    "branch-and-bound search for a maxdet matrix of this order");
    cmd->add_option("--budget-seconds", src.budget_seconds, "search time budget");
}

SignMatrix resolve_source(const SourceFlags& src, std::string& description) {
    const int given = (!src.file.empty()) + (!src.construct.empty()) + (src.search_order != 0);
    if (given != 1)
        throw CapacityError("exactly one of --file/--construct/--search is required");
    if (!src.file.empty()) {
        description = "file:" + src.file;
        return load_matrix_file(src.file);
    }
    if (src.search_order != 0) {
        const int n = src.search_order;
        description = "search:" + std::to_string(n);
        SearchBudget budget;
        budget.seconds = src.budget_seconds;
        const int64_t target = MaxDetTable::instance().d(n);
        SearchOutcome outcome = search_maxdet(n, target, budget);
        if (!outcome.matrix) {
            throw CapacityError("search exhausted its budget: visited " +
                                std::to_string(outcome.nodes_visited) + " nodes, best |det| " +
                                std::to_string(outcome.best_abs_det) + " (target " +
                                std::to_string(target) + ")");
        }
        return *outcome.matrix;
    }
    description = "construct:" + src.construct;
    const auto colon = src.construct.find(':');
    if (colon == std::string::npos)
        throw CapacityError("--construct expects NAME:ARG");
    const std::string name = src.construct.substr(0, colon);
    const int arg = std::stoi(src.construct.substr(colon + 1));
    if (name == "sylvester") return sylvester(arg);
    if (name == "paley") return paley_hadamard(arg);
    if (name == "maxdet") {
        if (arg == 13) return maxdet13();
        throw CapacityError("built-in maxdet construction available for order 13 only");
    }
    throw CapacityError("unknown construction '" + name + "'");
}

std::vector<int> parse_orders(const std::string& text, int n) {
    if (text.empty()) return all_orders(n);
    const auto dots = text.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = std::stoi(text);
    } else {
        lo = std::stoi(text.substr(0, dots));
        hi = std::stoi(text.substr(dots + 2));
    }
    if (lo < 1 || hi > n || lo > hi)
        throw CapacityError("--orders range must lie within 1.." + std::to_string(n));
    std::vector<int> out;
    for (int m = lo; m <= hi; ++m) out.push_back(m);
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file_atomic(out_path, content);
    }
}

ProgressFn stderr_progress(int n) {
    if (n < 15) return nullptr; // short runs stay quiet
    return [](int order, uint64_t done, uint64_t total) {
        std::fprintf(stderr, "\rorder %d: %llu/%llu row combinations", order,
                     static_cast<unsigned long long>(done),
                     static_cast<unsigned long long>(total));
        if (done >= total) std::fprintf(stderr, "\n");
    };
}

int cmd_minors(const SourceFlags& src, const std::string& alg, const std::string& orders_text,
               int workers, const std::string& format, const std::string& out_path) {
    std::string description;
    const SignMatrix a = resolve_source(src, description);
    const std::vector<int> orders = parse_orders(orders_text, a.order());

    MinorProfile profile;
    if (alg == "A") {
        const double cost = algA_cost_estimate(a.order(), orders);
        if (cost > 5e9)
            std::fprintf(stderr, "warning: Algorithm A estimate ~%.2g operations; "
                                 "Algorithm D would be faster\n", cost);
        profile = enumerate_minors_algA(a, orders);
    } else if (alg == "D") {
        EnumerateOptions opts;
        opts.workers = workers;
        opts.progress = stderr_progress(a.order());
        profile = enumerate_minors_algD(a, orders, opts);
    } else {
        throw CapacityError("--alg must be A or D");
    }

    if (format == "json") {
        emit(profile_to_json(profile), out_path);
    } else if (format == "csv") {
        emit(profile_to_csv(profile), out_path);
    } else if (format == "table") {
        emit(profile_table(profile), out_path);
    } else {
        throw CapacityError("--format must be json, csv or table");
    }
    return 0;
}

int cmd_report(const SourceFlags& src, int workers, const std::string& format,
               const std::string& out_path) {
    std::string description;
    const SignMatrix a = resolve_source(src, description);
    EnumerateOptions opts;
    opts.workers = workers;
    opts.progress = stderr_progress(a.order());
    const MinorProfile profile = enumerate_minors_algD(a, all_orders(a.order()), opts);
    const MinorReport report = build_report(a, profile, description);
    if (format == "json") {
        emit(report_to_json(report), out_path);
    } else if (format == "csv") {
        emit(profile_table_csv(report.profile), out_path);
    } else {
        throw CapacityError("--format must be json or csv");
    }
    return 0;
}

int cmd_bounds(int n, const std::string& out_path) {
    const bounds::ExcludedInterval interval = bounds::excluded_interval(n);
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof buf, "n = %d\n", n);
    out += buf;
    std::snprintf(buf, sizeof buf, "threshold 2 ln(n/4)/n = %.12f\n", interval.threshold);
    out += buf;
    std::snprintf(buf, sizeof buf, "f(x_max) = %.12f at x_max = %.12f\n",
                  bounds::f(bounds::x_max()), bounds::x_max());
    out += buf;
    if (interval.empty) {
        out += "excluded interval: empty (threshold >= f(x_max))\n";
    } else {
        std::snprintf(buf, sizeof buf, "excluded interval: x0 = %.12f, x1 = %.12f\n",
                      interval.x0, interval.x1);
        out += buf;
        std::snprintf(buf, sizeof buf, "excluded orders: %lld..%lld\n",
                      static_cast<long long>(interval.order_lo()),
                      static_cast<long long>(interval.order_hi()));
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "n/2 + 5 ln n = %.6f\nn - 2 = %d\n",
                  n / 2.0 + 5.0 * std::log(n), n - 2);
    out += buf;
    emit(out, out_path);
    return 0;
}

// ---- verify suites ----

struct VerifyContext {
    int failures = 0;
    void check(bool ok, const std::string& what) {
        std::printf("%s %s\n", ok ? "[pass]" : "[FAIL]", what.c_str());
        if (!ok) ++failures;
    }
};

SignMatrix hadamard_of_order(int n) {
    switch (n) {
    case 1: return sylvester(0);
    case 2: return sylvester(1);
    case 4: return sylvester(2);
    case 8: return sylvester(3);
    case 16: return sylvester(4);
    case 32: return sylvester(5);
    case 12: return paley_hadamard(11);
    case 20: return paley_hadamard(19);
    case 24: return paley_hadamard(23);
    default: throw CapacityError("no built-in Hadamard construction for order " + std::to_string(n));
    }
}

void verify_szollosi(VerifyContext& ctx, int order) {
    SignMatrix h = hadamard_of_order(order);
    const SzollosiResult r = szollosi_check(h, MaxDetTable::instance());
    ctx.check(r.ok, "szollosi pairing order " + std::to_string(order) + " (" +
                        std::to_string(r.pairs_checked) + " pairs)");
}

void verify_smallminors(VerifyContext& ctx, int order) {
    SignMatrix h = hadamard_of_order(order);
    const std::vector<int> orders{2, 3};
    const MinorProfile profile = enumerate_minors_algD(h, orders);
    ctx.check(vanishing_count(profile, 2) == predicted_z2(order),
              "vanishing 2-minors match prediction at n=" + std::to_string(order));
    ctx.check(vanishing_count(profile, 3) == predicted_z3(order),
              "vanishing 3-minors match prediction at n=" + std::to_string(order));
}

void verify_meansq(VerifyContext& ctx, int order) {
    SignMatrix h = hadamard_of_order(order);
    const MinorProfile profile = enumerate_minors_algD(h, all_orders(order));
    const MeanSquareReport report = mean_square_report(profile);
    ctx.check(report.all_r_upper_one,
              "mean-square upper bound met with equality at n=" + std::to_string(order));
}

void verify_spectrum(VerifyContext& ctx) {
    for (int n = 1; n <= 6; ++n) {
        ctx.check(spectrum_brute_force(n) == SpectrumTable::instance().spectrum(n),
                  "spectrum table matches brute force at n=" + std::to_string(n));
    }
}

void verify_crossalg(VerifyContext& ctx, uint64_t seed) {
    Xoshiro256 rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(7));
        std::vector<int8_t> e(static_cast<size_t>(n) * n);
        for (auto& v : e) v = (rng.next() & 1) ? 1 : -1;
        const SignMatrix a(n, std::move(e));
        const MinorProfile pa = enumerate_minors_algA(a, all_orders(n));
        const MinorProfile pd = enumerate_minors_algD(a, all_orders(n));
        ctx.check(pa == pd, "algorithms A and D agree on random order " + std::to_string(n));
    }
}

void verify_randommodel(VerifyContext& ctx, uint64_t seed) {
    ctx.check(std::fabs(even_limit_constant() - 0.7112119) < 1e-6,
              "even-determinant limit constant");
    const RandomModelHistogram h = random_model(2, 200000, seed);
    const double zero_frac = static_cast<double>(h.counts.at(0)) / h.samples;
    ctx.check(zero_frac > 0.48 && zero_frac < 0.52,
              "order-2 random minors vanish about half the time");
    const RandomModelHistogram again = random_model(2, 200000, seed);
    ctx.check(again.counts == h.counts, "histogram reproducible for a fixed seed");
}

void verify_bounds(VerifyContext& ctx) {
    ctx.check(std::fabs(bounds::f_derivative(bounds::x_max())) < 1e-10, "f'(x_max) vanishes");
    const double fx = bounds::f(bounds::x_max());
    ctx.check(fx > 0.14 && fx < 0.15, "f(x_max) in (0.14, 0.15)");
    bool eps_ok = true;
    for (double z = 0.01; z <= 0.67; z += 0.001)
        if (std::fabs(bounds::epsilon_closed(z) - bounds::epsilon_series(z)) > 1e-10)
            eps_ok = false;
    ctx.check(eps_ok, "epsilon series and closed form agree to 1e-10");
    ctx.check(bounds::epsilon_closed(bounds::z_max()) < 0.1803, "epsilon(z_max) < 0.1803");
    bool ineq_ok = true;
    for (int n = 8; n <= 10000; ++n)
        if (bounds::ineq28_holds(n) != (n <= 28)) ineq_ok = false;
    ctx.check(ineq_ok, "order-(n-3) inequality holds exactly for n <= 28");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minors: exhaustive minor enumeration and analysis of {+1,-1} matrices"};
    app.require_subcommand(1);

    SourceFlags minors_src;
    std::string minors_alg = "D", minors_orders, minors_format = "json", minors_out;
    int minors_workers = 1;
    CLI::App* minors_cmd = app.add_subcommand("minors", "enumerate all minors of a matrix");
    add_source_flags(minors_cmd, minors_src);
    minors_cmd->add_option("--alg", minors_alg, "A (floating Gaussian) or D (Laplace levels)");
    minors_cmd->add_option("--orders", minors_orders, "restrict to orders A..B (or a single order)");
    minors_cmd->add_option("--workers", minors_workers, "worker threads for Algorithm D");
    minors_cmd->add_option("--format", minors_format, "json | csv | table");
    minors_cmd->add_option("--out", minors_out, "output path (written atomically)");

    SourceFlags report_src;
    std::string report_format = "json", report_out;
    int report_workers = 1;
    CLI::App* report_cmd = app.add_subcommand("report", "full analysis report for a matrix");
    add_source_flags(report_cmd, report_src);
    report_cmd->add_option("--workers", report_workers, "worker threads");
    report_cmd->add_option("--format", report_format, "json | csv");
    report_cmd->add_option("--out", report_out, "output path (written atomically)");

    int bounds_n = 0;
    std::string bounds_out;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "excluded-interval report for an order");
    bounds_cmd->add_option("n", bounds_n, "Hadamard host order (>= 4)")->required();
    bounds_cmd->add_option("--out", bounds_out, "output path (written atomically)");

    std::string verify_suite;
    int verify_order = 8;
    uint64_t verify_seed = 1;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd
        ->add_option("suite", verify_suite,
                     "szollosi | smallminors | meansq | spectrum | crossalg | randommodel | bounds | all")
        ->required();
    verify_cmd->add_option("--order", verify_order, "matrix order for matrix-based suites");
    verify_cmd->add_option("--seed", verify_seed, "seed for randomized suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (minors_cmd->parsed())
            return cmd_minors(minors_src, minors_alg, minors_orders, minors_workers, minors_format,
                              minors_out);
        if (report_cmd->parsed())
            return cmd_report(report_src, report_workers, report_format, report_out);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_n, bounds_out);
        if (verify_cmd->parsed()) {
            VerifyContext ctx;
            const bool all = (verify_suite == "all");
            if (verify_suite == "szollosi" || all) verify_szollosi(ctx, verify_order);
            if (verify_suite == "smallminors" || all) verify_smallminors(ctx, verify_order);
            if (verify_suite == "meansq" || all) verify_meansq(ctx, verify_order);
            if (verify_suite == "spectrum" || all) verify_spectrum(ctx);
            if (verify_suite == "crossalg" || all) verify_crossalg(ctx, verify_seed);
            if (verify_suite == "randommodel" || all) verify_randommodel(ctx, verify_seed);
            if (verify_suite == "bounds" || all) verify_bounds(ctx);
            if (ctx.failures > 0) {
                std::printf("%d check(s) failed\n", ctx.failures);
                return kExitFailure;
            }
            std::printf("all checks passed\n");
            return 0;
        }
    } catch (const RoundingHazardError& e) {
        std::fprintf(stderr, "rounding hazard: %s\n", e.what());
        return kExitRoundingHazard;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error at line %d, column %d: %s\n", e.line(), e.column(),
                     e.what());
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    }
    return 0;
}
