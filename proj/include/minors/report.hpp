#pragma once

#include <optional>
#include <string>

#include "minors/analysis.hpp"
#include "minors/minor_profile.hpp"

namespace minors {

/// Full analysis bundle for one input matrix.
struct MinorReport {
    std::string source; // how the matrix was obtained (file/construction/search)
    int order = 0;
    bool hadamard = false;
    MinorProfile profile;
    DepthReport depth;
    MeanSquareReport mean_square;
    std::vector<std::pair<int, uint64_t>> vanishing; // order -> count of zero minors
    std::optional<uint64_t> z2_predicted, z3_predicted; // Hadamard inputs only
    std::optional<SzollosiResult> szollosi;             // Hadamard, order <= 12
    std::optional<bool> cohn;                           // Hadamard inputs only
    std::vector<std::pair<int, int>> gcd_powers;        // order -> alpha with k^alpha | gcd
};

/// Assemble the report from a complete profile (orders 1..n).
MinorReport build_report(const SignMatrix& a, const MinorProfile& profile,
                         const std::string& source);

std::string report_to_json(const MinorReport& r);

/// Formatted minor table, one row per order (descending), with the
/// bottom full-spectrum run merged:
///   m | {minors} | delta | max? | full?
std::string profile_table(const MinorProfile& profile);

/// The same layout as CSV: m,minors,delta,max,full.
std::string profile_table_csv(const MinorProfile& profile);

/// Render a sorted normalized value set the way the tables do: common powers
/// of k = floor(n/4) factored out, runs of >= 3 consecutive values collapsed
/// to "a..b". Example: {0,16,24,32} with k=2 -> "{0,2,3,4}x2^3".
std::string render_value_set(const std::vector<uint64_t>& values, int k);

/// Write via a temporary file and rename, so failures leave no partial file.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace minors
