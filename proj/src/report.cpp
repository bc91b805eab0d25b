#include "minors/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "minors/binomial.hpp"

namespace minors {

namespace {

std::string yes_no(std::optional<bool> v) {
    if (!v.has_value()) return "?";
    return *v ? "yes" : "no";
}

struct TableRow {
    int m_lo, m_hi; // inclusive order range (merged full-spectrum run)
    std::string set_text;
    std::string delta_text;
    std::string max_text;
    std::string full_text;
};

std::vector<TableRow> table_rows(const MinorProfile& profile) {
    const int n = profile.order();
    const int k = n / 4;
    const auto& maxdet = MaxDetTable::instance();
    const auto& spectra = SpectrumTable::instance();
    const std::vector<int> orders = profile.orders();

    // Bottom run of consecutive full-spectrum orders 1..t gets merged.
    int full_run = 0;
    for (int m = 1; m <= n && m <= SpectrumTable::kMaxOrder; ++m) {
        if (!profile.has_order(m)) break;
        if (profile.value_set(m) == spectra.spectrum(m))
            full_run = m;
        else
            break;
    }

    std::vector<TableRow> rows;
    for (auto it = orders.rbegin(); it != orders.rend(); ++it) {
        const int m = *it;
        if (full_run >= 2 && m <= full_run) {
            if (m == full_run) {
                uint64_t dmax = 0;
                for (int i = 1; i <= full_run; ++i) dmax = std::max(dmax, maxdet.delta(i));
                rows.push_back({1, full_run, "full spectrum", "<=" + std::to_string(dmax),
                                "yes", "yes"});
            }
            continue;
        }
        TableRow row;
        row.m_lo = row.m_hi = m;
        const auto vals = profile.value_set(m);
        row.set_text = render_value_set(vals, k);
        std::optional<bool> max_flag, full_flag;
        if (m <= MaxDetTable::kMaxOrder) {
            row.delta_text = std::to_string(maxdet.delta(m));
            max_flag = std::binary_search(vals.begin(), vals.end(), maxdet.delta(m));
        } else {
            row.delta_text = "?";
        }
        if (m <= SpectrumTable::kMaxOrder) full_flag = (vals == spectra.spectrum(m));
        row.max_text = yes_no(max_flag);
        row.full_text = yes_no(full_flag);
        rows.push_back(row);
    }
    return rows;
}

std::string range_text(const TableRow& row) {
    if (row.m_lo == row.m_hi) return std::to_string(row.m_lo);
    return std::to_string(row.m_lo) + "-" + std::to_string(row.m_hi);
}

} // namespace

std::string render_value_set(const std::vector<uint64_t>& values, int k) {
    if (values.empty()) return "{}";
    int alpha = 0;
    if (k >= 2) {
        uint64_t g = 0;
        for (uint64_t v : values)
            if (v != 0) g = (g == 0) ? v : std::gcd(g, v);
        if (g != 0) {
            while (g % static_cast<uint64_t>(k) == 0) {
                g /= static_cast<uint64_t>(k);
                ++alpha;
            }
        }
    }
    uint64_t divisor = 1;
    for (int i = 0; i < alpha; ++i) divisor *= static_cast<uint64_t>(k);

    std::string body;
    size_t i = 0;
    while (i < values.size()) {
        size_t j = i;
        while (j + 1 < values.size() && values[j + 1] == values[j] + divisor) ++j;
        if (!body.empty()) body += ",";
        if (j - i + 1 >= 3) {
            body += std::to_string(values[i] / divisor) + ".." + std::to_string(values[j] / divisor);
            i = j + 1;
        } else {
            body += std::to_string(values[i] / divisor);
            ++i;
        }
    }
    std::string out = "{" + body + "}";
    if (alpha == 1) out += "x" + std::to_string(k);
    if (alpha > 1) out += "x" + std::to_string(k) + "^" + std::to_string(alpha);
    return out;
}

MinorReport build_report(const SignMatrix& a, const MinorProfile& profile,
                         const std::string& source) {
    MinorReport r;
    r.source = source;
    r.order = a.order();
    r.hadamard = is_hadamard(a);
    r.profile = profile;
    r.depth = depth_report(profile, MaxDetTable::instance(), SpectrumTable::instance());
    r.mean_square = mean_square_report(profile);
    for (int m : profile.orders()) r.vanishing.emplace_back(m, vanishing_count(profile, m));
    if (r.hadamard) {
        if (r.order % 4 == 0) {
            r.z2_predicted = predicted_z2(r.order);
            r.z3_predicted = predicted_z3(r.order);
        }
        if (r.order <= 12) r.szollosi = szollosi_check(a, MaxDetTable::instance());
        r.cohn = cohn_check(profile);
    }
    const int k = r.order / 4;
    if (k >= 2)
        for (int m : profile.orders()) r.gcd_powers.emplace_back(m, gcd_power_of_k(profile, m, k));
    return r;
}

std::string report_to_json(const MinorReport& r) {
    nlohmann::ordered_json root;
    root["source"] = r.source;
    root["order"] = r.order;
    root["hadamard"] = r.hadamard;

    nlohmann::ordered_json depth;
    depth["m_d"] = r.depth.m_d;
    depth["d"] = r.depth.d;
    depth["m_f"] = r.depth.m_f;
    nlohmann::ordered_json orders = nlohmann::ordered_json::array();
    const int k = r.order / 4;
    for (const OrderFlags& flags : r.depth.orders) {
        nlohmann::ordered_json o;
        o["m"] = flags.m;
        o["minors"] = render_value_set(r.profile.value_set(flags.m), k);
        o["max"] = flags.attains_maxdet;
        if (flags.full_spectrum.has_value())
            o["full"] = *flags.full_spectrum;
        else
            o["full"] = "unknown";
        orders.push_back(std::move(o));
    }
    depth["orders"] = std::move(orders);
    root["depth"] = std::move(depth);

    nlohmann::ordered_json meansq = nlohmann::ordered_json::array();
    for (const MeanSquareRow& row : r.mean_square.rows) {
        nlohmann::ordered_json o;
        o["m"] = row.m;
        o["sum_squares"] = to_string_u128(row.sum_squares);
        o["pairs"] = row.pair_count;
        o["E_num"] = to_string_u128(row.e_num);
        o["E_den"] = row.e_den;
        o["R_L"] = format_ratio(row.r_lower);
        o["R_H"] = format_upper_ratio(row.r_upper);
        o["R_H_exact_one"] = row.r_upper_is_one;
        meansq.push_back(std::move(o));
    }
    root["mean_square"] = std::move(meansq);

    nlohmann::ordered_json vanish = nlohmann::ordered_json::array();
    for (const auto& [m, count] : r.vanishing) {
        nlohmann::ordered_json o;
        o["m"] = m;
        o["count"] = count;
        vanish.push_back(std::move(o));
    }
    root["vanishing"] = std::move(vanish);
    if (r.z2_predicted) root["Z2_predicted"] = *r.z2_predicted;
    if (r.z3_predicted) root["Z3_predicted"] = *r.z3_predicted;

    if (r.szollosi) {
        nlohmann::ordered_json o;
        o["ok"] = r.szollosi->ok;
        o["pairs_checked"] = r.szollosi->pairs_checked;
        root["szollosi"] = std::move(o);
    } else {
        root["szollosi"] = nullptr;
    }
    if (r.cohn)
        root["cohn"] = *r.cohn;
    else
        root["cohn"] = nullptr;

    if (!r.gcd_powers.empty()) {
        nlohmann::ordered_json gcds = nlohmann::ordered_json::array();
        for (const auto& [m, alpha] : r.gcd_powers) {
            nlohmann::ordered_json o;
            o["m"] = m;
            o["k"] = k;
            o["alpha"] = alpha;
            gcds.push_back(std::move(o));
        }
        root["gcd_power"] = std::move(gcds);
    }
    return root.dump(2) + "\n";
}

std::string profile_table(const MinorProfile& profile) {
    const auto rows = table_rows(profile);
    size_t w_m = 3, w_set = 8, w_delta = 6;
    for (const TableRow& row : rows) {
        w_m = std::max(w_m, range_text(row).size());
        w_set = std::max(w_set, row.set_text.size());
        w_delta = std::max(w_delta, row.delta_text.size());
    }
    std::string out;
    auto emit = [&](const std::string& m, const std::string& set, const std::string& delta,
                    const std::string& mx, const std::string& full) {
        out += m;
        out.append(w_m - m.size() + 2, ' ');
        out += set;
        out.append(w_set - set.size() + 2, ' ');
        out += delta;
        out.append(w_delta - delta.size() + 2, ' ');
        out += mx;
        out.append(mx.size() < 5 ? 5 - mx.size() : 1, ' ');
        out += full + "\n";
    };
    emit("m", "minors", "maxdet", "max?", "full?");
    for (const TableRow& row : rows)
        emit(range_text(row), row.set_text, row.delta_text, row.max_text, row.full_text);
    return out;
}

std::string profile_table_csv(const MinorProfile& profile) {
    std::string out = "m,minors,delta,max,full\n";
    for (const TableRow& row : table_rows(profile)) {
        out += range_text(row) + ",\"" + row.set_text + "\"," + row.delta_text + "," +
               row.max_text + "," + row.full_text + "\n";
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    try {
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw CapacityError("cannot open '" + tmp + "' for writing");
            out << content;
            if (!out.good()) throw CapacityError("write to '" + tmp + "' failed");
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

} // namespace minors
