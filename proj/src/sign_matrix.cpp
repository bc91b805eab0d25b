#include "minors/sign_matrix.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace minors {

namespace {

std::vector<uint32_t> masks_from_entries(int n, const std::vector<int8_t>& entries) {
    std::vector<uint32_t> masks(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (entries[static_cast<size_t>(i) * n + j] < 0)
                masks[i] |= (1u << j);
    return masks;
}

} // namespace

SignMatrix::SignMatrix(int n, std::vector<int8_t> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 1 || n > kMaxOrder)
        throw CapacityError("matrix order must be in [1, " + std::to_string(kMaxOrder) + "]");
    if (entries_.size() != static_cast<size_t>(n) * n)
        throw CapacityError("entry count does not match order");
    for (int8_t e : entries_)
        if (e != 1 && e != -1)
            throw CapacityError("entries must be +1 or -1");
    minus_masks_ = masks_from_entries(n_, entries_);
}

SignMatrix SignMatrix::ones(int n) {
    return SignMatrix(n, std::vector<int8_t>(static_cast<size_t>(n) * n, 1));
}

SignMatrix SignMatrix::from_minus_masks(int n, std::span<const uint32_t> masks) {
    if (n < 1 || n > kMaxOrder) throw CapacityError("matrix order out of range");
    if (static_cast<int>(masks.size()) != n) throw CapacityError("mask count does not match order");
    std::vector<int8_t> entries(static_cast<size_t>(n) * n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (masks[i] & (1u << j)) entries[static_cast<size_t>(i) * n + j] = -1;
    return SignMatrix(n, std::move(entries));
}

void Selector::validate(int n) const {
    if (rows.size() != cols.size())
        throw CapacityError("selector row/col sizes differ");
    if (rows.empty() || static_cast<int>(rows.size()) > n)
        throw CapacityError("selector size out of range");
    auto check = [n](const std::vector<int>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] >= n) throw CapacityError("selector index out of range");
            if (i > 0 && v[i] <= v[i - 1]) throw CapacityError("selector indices must strictly increase");
        }
    };
    check(rows);
    check(cols);
}

Selector complement_selector(const Selector& sel, int n) {
    Selector out;
    auto fill = [n](const std::vector<int>& in, std::vector<int>& result) {
        size_t pos = 0;
        for (int i = 0; i < n; ++i) {
            if (pos < in.size() && in[pos] == i) {
                ++pos;
            } else {
                result.push_back(i);
            }
        }
    };
    fill(sel.rows, out.rows);
    fill(sel.cols, out.cols);
    return out;
}

SignMatrix parse_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw ParseError("missing order line", 1, 1);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(header, &used);
        if (used != header.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError("malformed order line: '" + header + "'", 1, 1);
    }
    if (n < 1 || n > SignMatrix::kMaxOrder)
        throw ParseError("order " + std::to_string(n) + " out of range", 1, 1);

    std::vector<int8_t> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw ParseError("missing row " + std::to_string(i + 1), i + 2, 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != n)
            throw ParseError("ragged row: expected " + std::to_string(n) + " characters, got " +
                                 std::to_string(line.size()),
                             i + 2, static_cast<int>(line.size()) + 1);
        for (int j = 0; j < n; ++j) {
            if (line[j] == '+') {
                entries.push_back(1);
            } else if (line[j] == '-') {
                entries.push_back(-1);
            } else {
                throw ParseError(std::string("invalid character '") + line[j] + "'", i + 2, j + 1);
            }
        }
    }
    return SignMatrix(n, std::move(entries));
}

SignMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

SignMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return parse_matrix(in);
}

std::string serialize(const SignMatrix& a) {
    const int n = a.order();
    std::string out = std::to_string(n);
    out += '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out += (a.entry(i, j) > 0) ? '+' : '-';
        out += '\n';
    }
    return out;
}

bool is_hadamard(const SignMatrix& a) {
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int dot = n - 2 * std::popcount(a.minus_mask(i) ^ a.minus_mask(j));
            if (dot != 0) return false;
        }
    }
    return true;
}

SignMatrix apply_equivalence(const SignMatrix& a, std::span<const EquivalenceOp> ops) {
    int n = a.order();
    std::vector<int8_t> e(a.row(0), a.row(0) + static_cast<size_t>(n) * n);
    auto at = [&](int i, int j) -> int8_t& { return e[static_cast<size_t>(i) * n + j]; };
    for (const EquivalenceOp& op : ops) {
        switch (op.kind) {
        case EquivalenceOpKind::NegateRow:
            if (op.a < 0 || op.a >= n) throw CapacityError("row index out of range");
            for (int j = 0; j < n; ++j) at(op.a, j) = -at(op.a, j);
            break;
        case EquivalenceOpKind::NegateCol:
            if (op.a < 0 || op.a >= n) throw CapacityError("column index out of range");
            for (int i = 0; i < n; ++i) at(i, op.a) = -at(i, op.a);
            break;
        case EquivalenceOpKind::SwapRows:
            if (op.a < 0 || op.a >= n || op.b < 0 || op.b >= n)
                throw CapacityError("row index out of range");
            for (int j = 0; j < n; ++j) std::swap(at(op.a, j), at(op.b, j));
            break;
        case EquivalenceOpKind::SwapCols:
            if (op.a < 0 || op.a >= n || op.b < 0 || op.b >= n)
                throw CapacityError("column index out of range");
            for (int i = 0; i < n; ++i) std::swap(at(i, op.a), at(i, op.b));
            break;
        case EquivalenceOpKind::Transpose: {
            std::vector<int8_t> t(e.size());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) t[static_cast<size_t>(j) * n + i] = at(i, j);
            e = std::move(t);
            break;
        }
        }
    }
    return SignMatrix(n, std::move(e));
}

SignMatrix normalize_first_row_col(const SignMatrix& a) {
    const int n = a.order();
    std::vector<int8_t> e(a.row(0), a.row(0) + static_cast<size_t>(n) * n);
    auto at = [&](int i, int j) -> int8_t& { return e[static_cast<size_t>(i) * n + j]; };
    for (int j = 0; j < n; ++j)
        if (at(0, j) < 0)
            for (int i = 0; i < n; ++i) at(i, j) = -at(i, j);
    for (int i = 0; i < n; ++i)
        if (at(i, 0) < 0)
            for (int j = 0; j < n; ++j) at(i, j) = -at(i, j);
    return SignMatrix(n, std::move(e));
}

} // namespace minors
