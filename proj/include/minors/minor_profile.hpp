#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "minors/int128.hpp"

namespace minors {

/// Multiplicity map and sum of squared raw determinants for one minor order.
struct OrderCounts {
    std::map<uint64_t, uint64_t> values; // normalized |det|/2^(m-1) -> multiplicity
    u128 sum_squares = 0;                // sum of raw det(M)^2 over all submatrices

    bool operator==(const OrderCounts& other) const {
        return values == other.values && sum_squares == other.sum_squares;
    }
};

/// Per-order multiplicity maps of all minors of one matrix.
class MinorProfile {
public:
    MinorProfile() : order_(0) {}
    explicit MinorProfile(int order) : order_(order) {}

    int order() const { return order_; }

    bool has_order(int m) const { return per_order_.count(m) != 0; }
    const OrderCounts& counts(int m) const;
    OrderCounts& counts_mutable(int m) { return per_order_[m]; }

    /// Orders present, ascending.
    std::vector<int> orders() const;

    /// Sorted set of normalized values at order m.
    std::vector<uint64_t> value_set(int m) const;

    /// Sum of multiplicities at order m (equals C(n,m)^2 for a full order).
    uint64_t multiplicity_total(int m) const;

    /// Sum of multiplicities over all stored orders.
    uint64_t multiplicity_grand_total() const;

    bool operator==(const MinorProfile& other) const {
        return order_ == other.order_ && per_order_ == other.per_order_;
    }

private:
    int order_;
    std::map<int, OrderCounts> per_order_;
};

/// Pointwise sum of profiles computed from disjoint ranges of the same sweep.
MinorProfile merge_profiles(std::span<const MinorProfile> parts);

/// JSON form: {"order": n, "per_order": [{"m":, "values": [[v, mult]...],
/// "sum_squares": "<decimal>"}]}, values ascending. sum_squares is a string
/// because it can exceed 64 bits.
std::string profile_to_json(const MinorProfile& p);
MinorProfile profile_from_json(const std::string& text);

/// CSV form with header m,normalized,multiplicity.
std::string profile_to_csv(const MinorProfile& p);

} // namespace minors
