// SPDX-License-Identifier: Apache-2.0
#ifndef OC_QUANTUM_RATIONAL_HPP
#define OC_QUANTUM_RATIONAL_HPP

#include <string>
#include <vector>

#include "oc/polynomial.hpp"

namespace oc {

// A reduced rational function in one formal Novikov variable.
//
// Canonical form: numerator and denominator coprime, denominator monic.
// Constants carry an empty variable name, so equality of canonical forms is
// plain syntactic comparison. Closed under t -> 1/t.
class QuantumRational {
public:
    QuantumRational() = default;
    explicit QuantumRational(const Rational& c);
    QuantumRational(std::string var, Poly num, Poly den);

    // c * t^power / (1 - t^power), the geometric building block of the
    // quantum corrections.
    static QuantumRational geometric(const std::string& var, const Rational& c, int power);

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return var_.empty(); }
    Rational constant_value() const;

    const std::string& var() const { return var_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    QuantumRational operator+(const QuantumRational& o) const;
    QuantumRational operator-(const QuantumRational& o) const;
    QuantumRational operator*(const QuantumRational& o) const;
    QuantumRational operator-() const;
    QuantumRational scaled(const Rational& c) const;

    // f(t) -> f(1/t), reduced; an involution on canonical forms.
    QuantumRational substitute_inverse() const;

    // Same function, expressed in another formal variable.
    QuantumRational with_variable(std::string var) const;

    // Power-series coefficients of t^0..t^order. Requires den(0) != 0.
    std::vector<Rational> series_expand(int order) const;

    bool operator==(const QuantumRational& o) const {
        return var_ == o.var_ && num_ == o.num_ && den_ == o.den_;
    }

    std::string str() const;

private:
    void canonicalize();
    static std::string merged_var(const QuantumRational& a, const QuantumRational& b);

    std::string var_;
    Poly num_;
    Poly den_ = Poly(Rational(1));
};

} // namespace oc

#endif
