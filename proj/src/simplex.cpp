// SPDX-License-Identifier: Apache-2.0
#include "oc/simplex.hpp"

#include <stdexcept>

namespace oc {

std::optional<std::vector<Rational>> simplex_feasible_point(const RationalMatrix& a,
                                                            std::vector<Rational> b) {
    const size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("rhs size mismatch");

    // Tableau [A | I | b] with artificial basis; the extra row carries the
    // phase-1 reduced costs.
    const size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
    for (size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (size_t j = 0; j < n; ++j) t[i][j] = flip ? -a.at(i, j) : a.at(i, j);
        t[i][n + i] = 1;
        t[i][cols - 1] = flip ? -b[i] : b[i];
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < m; ++i) t[m][j] -= t[i][j];
    for (size_t i = 0; i < m; ++i) t[m][cols - 1] -= t[i][cols - 1];

    while (true) {
        // Bland: entering column is the lowest-index negative reduced cost.
        size_t enter = cols - 1;
        for (size_t j = 0; j < n + m; ++j)
            if (t[m][j] < 0) { enter = j; break; }
        if (enter == cols - 1) break;

        size_t leave = m; // row index
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            const Rational cur = t[i][cols - 1] / t[i][enter];
            const Rational best = t[leave][cols - 1] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) throw std::logic_error("unbounded phase-1 objective");

        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    if (t[m][cols - 1] != 0) return std::nullopt; // artificials cannot be driven out

    std::vector<Rational> w(n);
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < n) w[basis[i]] = t[i][cols - 1];
    return w;
}

} // namespace oc
