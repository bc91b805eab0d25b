#include "minors/minor_profile.hpp"

#include <json.hpp>

#include "minors/errors.hpp"

namespace minors {

const OrderCounts& MinorProfile::counts(int m) const {
    auto it = per_order_.find(m);
    if (it == per_order_.end())
        throw CapacityError("profile has no order " + std::to_string(m));
    return it->second;
}

std::vector<int> MinorProfile::orders() const {
    std::vector<int> out;
    out.reserve(per_order_.size());
    for (const auto& [m, counts] : per_order_) out.push_back(m);
    return out;
}

std::vector<uint64_t> MinorProfile::value_set(int m) const {
    std::vector<uint64_t> out;
    const OrderCounts& c = counts(m);
    out.reserve(c.values.size());
    for (const auto& [v, mult] : c.values) out.push_back(v);
    return out;
}

uint64_t MinorProfile::multiplicity_total(int m) const {
    uint64_t total = 0;
    for (const auto& [v, mult] : counts(m).values) total += mult;
    return total;
}

uint64_t MinorProfile::multiplicity_grand_total() const {
    uint64_t total = 0;
    for (const auto& [m, counts] : per_order_) {
        (void)counts;
        total += multiplicity_total(m);
    }
    return total;
}

MinorProfile merge_profiles(std::span<const MinorProfile> parts) {
    if (parts.empty()) throw CapacityError("merge_profiles needs at least one part");
    MinorProfile out(parts.front().order());
    for (const MinorProfile& part : parts) {
        if (part.order() != out.order())
            throw CapacityError("merge_profiles: mismatched source orders");
        for (int m : part.orders()) {
            OrderCounts& dst = out.counts_mutable(m);
            const OrderCounts& src = part.counts(m);
            for (const auto& [v, mult] : src.values) dst.values[v] += mult;
            dst.sum_squares += src.sum_squares;
        }
    }
    return out;
}

std::string profile_to_json(const MinorProfile& p) {
    nlohmann::ordered_json root;
    root["order"] = p.order();
    nlohmann::ordered_json orders = nlohmann::ordered_json::array();
    for (int m : p.orders()) {
        nlohmann::ordered_json entry;
        entry["m"] = m;
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (const auto& [v, mult] : p.counts(m).values)
            values.push_back(nlohmann::ordered_json::array({v, mult}));
        entry["values"] = std::move(values);
        entry["sum_squares"] = to_string_u128(p.counts(m).sum_squares);
        orders.push_back(std::move(entry));
    }
    root["per_order"] = std::move(orders);
    return root.dump(2) + "\n";
}

MinorProfile profile_from_json(const std::string& text) {
    const auto root = nlohmann::json::parse(text);
    MinorProfile p(root.at("order").get<int>());
    for (const auto& entry : root.at("per_order")) {
        OrderCounts& c = p.counts_mutable(entry.at("m").get<int>());
        for (const auto& pair : entry.at("values"))
            c.values[pair.at(0).get<uint64_t>()] = pair.at(1).get<uint64_t>();
        u128 ss = 0;
        for (char ch : entry.at("sum_squares").get<std::string>()) {
            if (ch < '0' || ch > '9') throw CapacityError("bad sum_squares digits");
            ss = ss * 10 + static_cast<unsigned>(ch - '0');
        }
        c.sum_squares = ss;
    }
    return p;
}

std::string profile_to_csv(const MinorProfile& p) {
    std::string out = "m,normalized,multiplicity\n";
    for (int m : p.orders())
        for (const auto& [v, mult] : p.counts(m).values)
            out += std::to_string(m) + "," + std::to_string(v) + "," + std::to_string(mult) + "\n";
    return out;
}

} // namespace minors
