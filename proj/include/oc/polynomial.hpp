// SPDX-License-Identifier: Apache-2.0
#ifndef OC_POLYNOMIAL_HPP
#define OC_POLYNOMIAL_HPP

#include <vector>

#include "oc/rational.hpp"

namespace oc {

// Dense univariate polynomial with rational coefficients.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational& c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of t^k; zero beyond the degree.
    Rational coeff(int k) const;
    const Rational& leading() const;
    Rational constant_term() const { return coeff(0); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rational& c) const;

    // Euclidean division over the rationals; o must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    // Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

    // t^m * p(1/t); requires m >= degree().
    Poly reversed(int m) const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace oc

#endif
