// SPDX-License-Identifier: Apache-2.0
#include "oc/matrix.hpp"

#include <stdexcept>

namespace oc {

RationalMatrix::RationalMatrix(size_t rows, size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

namespace {

struct Echelon {
    std::vector<std::vector<Int>> a; // row echelon, integer entries
    std::vector<std::pair<size_t, size_t>> pivots; // (row, col)
};

// Fraction-free elimination. Rows are scaled to integers first; the Bareiss
// update keeps intermediate entries as minors, bounding their growth.
Echelon bareiss(const RationalMatrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    Echelon e;
    e.a.assign(rows, std::vector<Int>(cols));
    for (size_t i = 0; i < rows; ++i) {
        Int scale = 1;
        for (size_t j = 0; j < cols; ++j) scale = lcm(scale, denominator(m.at(i, j)));
        for (size_t j = 0; j < cols; ++j)
            e.a[i][j] = numerator(m.at(i, j)) * (scale / denominator(m.at(i, j)));
    }
    Int prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && e.a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(e.a[row], e.a[piv]);
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                e.a[i][j] = (e.a[row][col] * e.a[i][j] - e.a[i][col] * e.a[row][j]) / prev;
            e.a[i][col] = 0;
        }
        prev = e.a[row][col];
        e.pivots.emplace_back(row, col);
        ++row;
    }
    return e;
}

} // namespace

std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
    const size_t cols = m.cols();
    const Echelon e = bareiss(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols);
        v[free_col] = 1;
        for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
            auto [r, c] = *it;
            Rational acc = 0;
            for (size_t j = c + 1; j < cols; ++j)
                if (v[j] != 0) acc += Rational(e.a[r][j]) * v[j];
            v[c] = -acc / Rational(e.a[r][c]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank(const RationalMatrix& m) { return bareiss(m).pivots.size(); }

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
    const size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug.at(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != col)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(col, j), aug.at(piv, j));
        const Rational d = aug.at(col, col);
        for (size_t j = 0; j < 2 * n; ++j) aug.at(col, j) /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || aug.at(i, col) == 0) continue;
            const Rational f = aug.at(i, col);
            for (size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(col, j);
        }
    }
    RationalMatrix out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
    std::vector<Rational> out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

} // namespace oc
