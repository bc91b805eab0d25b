#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "minors/errors.hpp"

namespace minors {

/// Dense square {+1,-1} matrix. Immutable after construction; rows are
/// mirrored as bitmasks (bit j set <=> entry (i,j) == -1) for the hot loops.
class SignMatrix {
public:
    static constexpr int kMaxOrder = 32;

    /// Entries row-major, each exactly +1 or -1.
    SignMatrix(int n, std::vector<int8_t> entries);

    /// Matrix of all +1 entries.
    static SignMatrix ones(int n);

    /// Build from per-row minus-masks (bit j set => entry -1).
    static SignMatrix from_minus_masks(int n, std::span<const uint32_t> masks);

    int order() const { return n_; }
    int entry(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
    const int8_t* row(int i) const { return entries_.data() + static_cast<size_t>(i) * n_; }
    uint32_t minus_mask(int i) const { return minus_masks_[i]; }

    bool operator==(const SignMatrix& other) const = default;

private:
    int n_;
    std::vector<int8_t> entries_;
    std::vector<uint32_t> minus_masks_;
};

/// Row/column index sets selecting an m x m submatrix.
/// Indices strictly increasing, within [0, n).
struct Selector {
    std::vector<int> rows;
    std::vector<int> cols;

    void validate(int n) const;
    int size() const { return static_cast<int>(rows.size()); }
};

/// Complementary selector (the rows/cols NOT selected), in increasing order.
Selector complement_selector(const Selector& sel, int n);

/// Matrix file format: line 1 is the decimal order n, lines 2..n+1 are n
/// characters each from {+,-}. '+' means +1. Trailing newline optional.
SignMatrix parse_matrix(std::istream& in);
SignMatrix parse_matrix(const std::string& text);
SignMatrix load_matrix_file(const std::string& path);

std::string serialize(const SignMatrix& a);

/// True iff A * A^T == n * I (exact integer test).
bool is_hadamard(const SignMatrix& a);

enum class EquivalenceOpKind { NegateRow, NegateCol, SwapRows, SwapCols, Transpose };

struct EquivalenceOp {
    EquivalenceOpKind kind;
    int a = 0;
    int b = 0;

    static EquivalenceOp negate_row(int i) { return {EquivalenceOpKind::NegateRow, i, 0}; }
    static EquivalenceOp negate_col(int j) { return {EquivalenceOpKind::NegateCol, j, 0}; }
    static EquivalenceOp swap_rows(int i, int j) { return {EquivalenceOpKind::SwapRows, i, j}; }
    static EquivalenceOp swap_cols(int i, int j) { return {EquivalenceOpKind::SwapCols, i, j}; }
    static EquivalenceOp transpose() { return {EquivalenceOpKind::Transpose, 0, 0}; }
};

/// Apply a Hadamard/HT-equivalence op sequence (left to right).
/// The multiset of minors is invariant under any such sequence.
SignMatrix apply_equivalence(const SignMatrix& a, std::span<const EquivalenceOp> ops);

/// Negate rows/columns so that the first row and first column are all +1.
SignMatrix normalize_first_row_col(const SignMatrix& a);

} // namespace minors
