// Expected minor tables for the matrices this project reproduces, keyed by
// order (and class letter where several inequivalent maxdet classes exist).
// Each row lists the normalized values of one minor order; orders 1..full_run
// carry the full spectrum and are expanded from the SpectrumTable.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "minors/catalog.hpp"
#include "minors/minor_profile.hpp"

namespace minors::testsupport {

struct ExpectedRow {
    int m;
    uint64_t factor;
    std::vector<uint64_t> values; // unscaled; multiply by factor
};

struct ExpectedTable {
    int n;
    char cls;     // 'a', 'b', ... or ' ' when the class is unique
    int full_run; // orders 1..full_run realize the full spectrum
    int d;
    int m_f;
    std::vector<ExpectedRow> rows; // explicit rows, any order
};

inline std::vector<uint64_t> seq(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> v;
    for (uint64_t x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

inline std::vector<uint64_t> cat(std::vector<uint64_t> a, const std::vector<uint64_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline const std::vector<ExpectedTable>& expected_tables() {
    static const std::vector<ExpectedTable> tables = [] {
        std::vector<ExpectedTable> t;
        t.push_back({1, ' ', 1, 1, 1, {}});
        t.push_back({2, ' ', 1, 1, 1, {{2, 1, {1}}}});
        t.push_back({3, ' ', 2, 1, 2, {{3, 1, {1}}}});
        t.push_back({4, ' ', 2, 1, 2, {{4, 1, {2}}, {3, 1, {1}}}});
        t.push_back({5, ' ', 3, 1, 3, {{5, 1, {3}}, {4, 1, {1, 2}}}});
        t.push_back({6, ' ', 4, 1, 4, {{6, 1, {5}}, {5, 1, {1, 2, 3}}}});
        t.push_back({7, ' ', 6, 1, 6, {{7, 1, {9}}}});
        t.push_back({8, ' ', 4, 4, 4,
                     {{8, 16, {2}}, {7, 8, {1}}, {6, 4, {0, 1}}, {5, 2, {0, 1}}}});
        t.push_back({9, ' ', 6, 1, 6,
                     {{9, 8, {7}}, {8, 4, {2, 3, 4, 6, 8}}, {7, 2, seq(0, 4)}}});
        t.push_back({10, ' ', 6, 2, 6,
                     {{10, 16, {9}},
                      {9, 8, {3, 6}},
                      {8, 4, {0, 1, 2, 3, 4, 5, 8}},
                      {7, 2, seq(0, 4)}}});
        t.push_back({11, 'a', 7, 4, 7,
                     {{11, 16, {20}},
                      {10, 8, {0, 2, 3, 4, 5, 6, 7, 8, 10, 12, 16}},
                      {9, 1,
                       cat(cat(cat({0, 2, 3, 4, 6, 8, 9, 10}, seq(12, 24)), seq(26, 33)),
                           {36, 40, 48})},
                      {8, 1, cat(seq(0, 18), {20, 24})}}});
        t.push_back({11, 'b', 7, 4, 7,
                     {{11, 16, {20}},
                      {10, 8, {0, 1, 4, 5, 6, 8, 9, 10, 11, 14, 16}},
                      {9, 1,
                       cat(cat(cat({0, 2, 3, 4, 6}, seq(8, 24)),
                               {26, 27, 28, 30, 31, 32}),
                           {36, 40, 44, 48})},
                      {8, 1, cat(seq(0, 18), {20, 24})}}});
        t.push_back({11, 'c', 6, 3, 6,
                     {{11, 16, {20}},
                      {10, 8, {4, 6, 8, 12, 16}},
                      {9, 4, {0, 1, 2, 3, 4, 6, 8, 12}},
                      {8, 2, cat(seq(0, 8), {12, 16})},
                      {7, 1, seq(0, 8)}}});
        t.push_back({12, ' ', 6, 5, 6,
                     {{12, 729, {2}},
                      {11, 243, {1}},
                      {10, 81, {0, 1}},
                      {9, 27, {0, 1}},
                      {8, 9, {0, 1, 2}},
                      {7, 3, {0, 1, 2, 3}}}});
        t.push_back({13, ' ', 7, 6, 7,
                     {{13, 729, {5}},
                      {12, 243, {2, 3}},
                      {11, 81, seq(0, 3)},
                      {10, 27, seq(0, 4)},
                      {9, 9, seq(0, 5)},
                      {8, 3, seq(0, 6)}}});
        t.push_back({14, ' ', 7, 7, 7,
                     {{14, 729, {13}},
                      {13, 243, {4, 6, 7, 9}},
                      {12, 81, cat(seq(0, 7), {9, 10})},
                      {11, 27, cat(seq(0, 9), {11})},
                      {10, 9, seq(0, 13)},
                      {9, 3, seq(0, 15)},
                      {8, 1, cat(seq(0, 18), {20})}}});
        t.push_back({15, ' ', 7, 8, 7,
                     {{15, 729, {35}},
                      {14, 243, {7, 8, 12, 14, 17, 18, 21, 23, 27}},
                      {13, 81, cat(seq(0, 21), {23, 24, 26, 27})},
                      {12, 27, cat(seq(0, 22), seq(24, 27))},
                      {11, 9, cat(seq(0, 29), {31, 35})},
                      {10, 3, cat(seq(0, 36), {39, 40})},
                      {9, 1, cat(seq(0, 36), {38, 39, 40, 42, 44, 45})},
                      {8, 1, cat(seq(0, 18), {20, 24})}}});
        // The four order-16 classes share the top rows.
        const std::vector<ExpectedRow> top16{{16, 65536, {2}}, {15, 16384, {1}},
                                             {14, 4096, {0, 1}}, {13, 1024, {0, 1}},
                                             {12, 256, {0, 1, 2}}, {11, 64, seq(0, 3)}};
        {
            ExpectedTable a{16, 'a', 5, 8, 5, top16};
            a.rows.push_back({10, 32, {0, 1, 2}});
            a.rows.push_back({9, 16, {0, 1, 2}});
            a.rows.push_back({8, 8, seq(0, 4)});
            a.rows.push_back({7, 4, {0, 1, 2}});
            a.rows.push_back({6, 2, {0, 1, 2}});
            t.push_back(std::move(a));
        }
        {
            ExpectedTable b{16, 'b', 6, 8, 6, top16};
            b.rows.push_back({10, 16, seq(0, 5)});
            b.rows.push_back({9, 8, seq(0, 4)});
            b.rows.push_back({8, 4, cat(seq(0, 6), {8})});
            b.rows.push_back({7, 2, seq(0, 4)});
            t.push_back(std::move(b));
        }
        {
            ExpectedTable c{16, 'c', 7, 8, 7, top16};
            c.rows.push_back({10, 16, seq(0, 5)});
            c.rows.push_back({9, 4, seq(0, 9)});
            c.rows.push_back({8, 2, cat(seq(0, 10), {12, 16})});
            t.push_back(std::move(c));
        }
        {
            ExpectedTable d{16, 'd', 8, 8, 8, top16};
            d.rows.push_back({10, 16, seq(0, 5)});
            t.push_back(std::move(d));
        }
        return t;
    }();
    return tables;
}

inline const ExpectedTable& expected_table(int n, char cls = ' ') {
    for (const ExpectedTable& t : expected_tables())
        if (t.n == n && t.cls == cls) return t;
    throw std::runtime_error("no expected table for that order/class");
}

/// Compare a complete profile against an expected table. Full-spectrum rows
/// compare against the SpectrumTable; explicit rows against scaled values.
/// Returns an empty string on match, else a description of the first mismatch.
inline std::string match_table(const MinorProfile& profile, const ExpectedTable& expected) {
    const auto& spectra = SpectrumTable::instance();
    for (int m = 1; m <= expected.full_run; ++m) {
        if (profile.value_set(m) != spectra.spectrum(m))
            return "order " + std::to_string(m) + " is not the full spectrum";
    }
    for (const ExpectedRow& row : expected.rows) {
        std::vector<uint64_t> want;
        want.reserve(row.values.size());
        for (uint64_t v : row.values) want.push_back(v * row.factor);
        if (profile.value_set(row.m) != want)
            return "order " + std::to_string(row.m) + " value set mismatch";
    }
    // every order accounted for
    for (int m = expected.full_run + 1; m <= expected.n; ++m) {
        bool listed = false;
        for (const ExpectedRow& row : expected.rows) listed |= (row.m == m);
        if (!listed) return "expected table missing order " + std::to_string(m);
    }
    return "";
}

/// Depths table (single-class orders only assert their unique class entry).
struct DepthEntry {
    int n, d, m_d, m_f;
};

inline const std::vector<DepthEntry>& depth_table() {
    static const std::vector<DepthEntry> entries{
        {1, 1, 0, 1},  {2, 1, 1, 1},  {3, 1, 2, 2},   {4, 1, 3, 2},   {5, 1, 4, 3},
        {6, 1, 5, 4},  {7, 1, 6, 6},  {8, 4, 4, 4},   {9, 1, 8, 6},   {10, 2, 8, 6},
        {11, 3, 8, 7}, {12, 5, 7, 6}, {13, 6, 7, 7},  {14, 7, 7, 7},  {15, 8, 7, 7},
        {16, 8, 8, 8}, {17, 1, 16, 8}, {18, 7, 11, 8}, {19, 10, 9, 9}, {20, 10, 10, 8},
        {21, 10, 11, 10}};
    return entries;
}

/// Mean-square ratio table entries as printed (value strings carry their own
/// display precision; tolerance is one unit in the last printed digit).
struct RatioEntry {
    int n, m;
    const char* r_lower;
    const char* r_upper;
};

inline const std::vector<RatioEntry>& ratio_table() {
    static const std::vector<RatioEntry> entries{
        {13, 2, "1.077", "0.994"},  {13, 3, "1.259", "0.983"},  {13, 4, "1.611", "0.968"},
        {13, 5, "2.283", "0.949"},  {13, 6, "3.625", "0.928"},  {13, 7, "6.560", "0.904"},
        {13, 8, "13.81", "0.879"},  {13, 9, "34.80", "0.851"},  {13, 10, "109.4", "0.823"},
        {13, 11, "457.4", "0.795"}, {13, 12, "2864", "0.765"},  {13, 13, "35796", "0.736"},
        {14, 2, "1.067", "0.991"},  {14, 3, "1.222", "0.973"},  {14, 4, "1.516", "0.948"},
        {14, 5, "2.054", "0.917"},  {14, 6, "3.072", "0.882"},  {14, 7, "5.139", "0.843"},
        {14, 8, "9.773", "0.802"},  {14, 9, "21.58", "0.759"},  {14, 10, "56.93", "0.715"},
        {14, 11, "187.0", "0.671"}, {14, 12, "815.6", "0.627"}, {14, 13, "5318", "0.584"},
        {14, 14, "69137", "0.542"}, {15, 2, "1.059", "0.988"},  {15, 3, "1.195", "0.966"},
        {15, 4, "1.445", "0.935"},  {15, 5, "1.890", "0.897"},  {15, 6, "2.694", "0.852"},
        {15, 7, "4.233", "0.804"},  {15, 8, "7.427", "0.752"},  {15, 9, "14.79", "0.699"},
        {15, 10, "34.14", "0.645"}, {15, 11, "94.00", "0.592"}, {15, 12, "321.7", "0.540"},
        {15, 13, "1461", "0.491"},  {15, 14, "9902", "0.444"},  {15, 15, "133638", "0.399"}};
    return entries;
}

/// |value - parsed(text)| <= one unit in the last printed digit of `text`.
inline bool matches_printed(double value, const std::string& text) {
    const double printed = std::stod(text);
    const auto dot = text.find('.');
    const double unit =
        (dot == std::string::npos) ? 1.0 : std::pow(10.0, -static_cast<double>(text.size() - dot - 1));
    return std::fabs(value - printed) <= unit * 1.0000001;
}

} // namespace minors::testsupport
