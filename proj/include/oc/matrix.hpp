// SPDX-License-Identifier: Apache-2.0
#ifndef OC_MATRIX_HPP
#define OC_MATRIX_HPP

#include <vector>

#include "oc/rational.hpp"

namespace oc {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    RationalMatrix(size_t rows, size_t cols, std::vector<Rational> entries);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_symmetric() const;
    bool operator==(const RationalMatrix& o) const = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Exact null-space basis via fraction-free (Bareiss) elimination.
// Empty result iff the kernel is trivial; size is cols - rank.
std::vector<std::vector<Rational>> kernel(const RationalMatrix& m);

size_t rank(const RationalMatrix& m);

// Exact inverse via Gauss-Jordan; throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v);

} // namespace oc

#endif
