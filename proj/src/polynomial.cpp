// SPDX-License-Identifier: Apache-2.0
#include "oc/polynomial.hpp"

#include <stdexcept>

namespace oc {

Poly::Poly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int power) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<size_t>(power) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return {};
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * c;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem(num.coeffs_);
    const int dd = den.degree();
    int rd = num.degree();
    if (rd < dd) return {Poly{}, num};
    std::vector<Rational> quot(static_cast<size_t>(rd - dd) + 1);
    while (rd >= dd) {
        if (rem[static_cast<size_t>(rd)] != 0) {
            const Rational q = rem[static_cast<size_t>(rd)] / den.leading();
            quot[static_cast<size_t>(rd - dd)] = q;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<size_t>(rd - dd + j)] -= q * den.coeff(j);
        }
        --rd;
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading());
    return a;
}

Poly Poly::reversed(int m) const {
    if (m < degree()) throw std::invalid_argument("reversal order below degree");
    std::vector<Rational> v(static_cast<size_t>(m) + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        v[static_cast<size_t>(m) - i] = coeffs_[i];
    return Poly(std::move(v));
}

} // namespace oc
