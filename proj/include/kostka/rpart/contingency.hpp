#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/rpart/rpartition.hpp"

namespace kostka {

/// r x r nonnegative integer matrix. Rows are indexed by the blocks of m'
/// and columns by the blocks of m, so column sums give m and row sums m'.
/// Accessors are 1-based to match the usual h_{ij} notation.
class ContingencyMatrix {
public:
    ContingencyMatrix() = default;
    explicit ContingencyMatrix(int r) : r_(r), h_(static_cast<std::size_t>(r * r), 0) {}

    int r() const { return r_; }
    int operator()(int i, int j) const { return h_[idx(i, j)]; }
    int& operator()(int i, int j) { return h_[idx(i, j)]; }

    /// h_{i, <=j} = sum_{j' <= j} h_{i j'}.
    int row_prefix(int i, int j) const {
        int s = 0;
        for (int b = 1; b <= j; ++b) s += (*this)(i, b);
        return s;
    }
    /// h_{<=i, j}.
    int col_prefix(int i, int j) const {
        int s = 0;
        for (int a = 1; a <= i; ++a) s += (*this)(a, j);
        return s;
    }
    /// h_{<=i, <=j}.
    int block_prefix(int i, int j) const {
        int s = 0;
        for (int a = 1; a <= i; ++a) s += row_prefix(a, j);
        return s;
    }

    Composition column_sums() const {
        Composition c{std::vector<int>(static_cast<std::size_t>(r_), 0)};
        for (int i = 1; i <= r_; ++i)
            for (int j = 1; j <= r_; ++j) c.m[static_cast<std::size_t>(j - 1)] += (*this)(i, j);
        return c;
    }
    Composition row_sums() const {
        Composition c{std::vector<int>(static_cast<std::size_t>(r_), 0)};
        for (int i = 1; i <= r_; ++i)
            for (int j = 1; j <= r_; ++j) c.m[static_cast<std::size_t>(i - 1)] += (*this)(i, j);
        return c;
    }

    ContingencyMatrix transposed() const {
        ContingencyMatrix out(r_);
        for (int i = 1; i <= r_; ++i)
            for (int j = 1; j <= r_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    std::string to_string() const {
        std::string out = "[";
        for (int i = 1; i <= r_; ++i) {
            out += i > 1 ? ", [" : "[";
            for (int j = 1; j <= r_; ++j) out += (j > 1 ? "," : "") + std::to_string((*this)(i, j));
            out += "]";
        }
        return out + "]";
    }

    friend bool operator==(const ContingencyMatrix&, const ContingencyMatrix&) = default;
    friend auto operator<=>(const ContingencyMatrix&, const ContingencyMatrix&) = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>((i - 1) * r_ + (j - 1));
    }
    int r_ = 0;
    std::vector<int> h_;
};

/// All matrices with column sums m and row sums m_row. Depth-first fill,
/// rows in ascending order, each row's cells in ascending column order with
/// larger values tried first.
inline std::vector<ContingencyMatrix> enumerate_contingency(const Composition& m, const Composition& m_row) {
    if (m.r() != m_row.r()) throw InvalidArgument("contingency margins have different lengths");
    if (m.n() != m_row.n()) throw InvalidArgument("contingency margins have different totals");
    const int r = m.r();
    std::vector<ContingencyMatrix> out;
    ContingencyMatrix cur(r);
    std::vector<int> col_left = m.m;
    std::function<void(int, int, int)> rec = [&](int i, int j, int row_left) {
        if (i > r) {
            out.push_back(cur);
            return;
        }
        if (j == r) {
            // Last cell of the row is forced.
            if (row_left > col_left[static_cast<std::size_t>(j - 1)]) return;
            cur(i, j) = row_left;
            col_left[static_cast<std::size_t>(j - 1)] -= row_left;
            rec(i + 1, 1, i < r ? m_row.m[static_cast<std::size_t>(i)] : 0);
            col_left[static_cast<std::size_t>(j - 1)] += row_left;
            cur(i, j) = 0;
            return;
        }
        const int cap = std::min(row_left, col_left[static_cast<std::size_t>(j - 1)]);
        for (int v = cap; v >= 0; --v) {
            cur(i, j) = v;
            col_left[static_cast<std::size_t>(j - 1)] -= v;
            rec(i, j + 1, row_left - v);
            col_left[static_cast<std::size_t>(j - 1)] += v;
        }
        cur(i, j) = 0;
    };
    if (r == 0) return out;
    rec(1, 1, m_row.m[0]);
    return out;
}

} // namespace kostka
