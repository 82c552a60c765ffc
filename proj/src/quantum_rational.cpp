// SPDX-License-Identifier: Apache-2.0
#include "oc/quantum_rational.hpp"

#include <stdexcept>

namespace oc {

QuantumRational::QuantumRational(const Rational& c) : num_(c) {}

QuantumRational::QuantumRational(std::string var, Poly num, Poly den)
    : var_(std::move(var)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    canonicalize();
}

QuantumRational QuantumRational::geometric(const std::string& var, const Rational& c, int power) {
    std::vector<Rational> den(static_cast<size_t>(power) + 1);
    den[0] = 1;
    den.back() = -1;
    return QuantumRational(var, Poly::monomial(c, power), Poly(std::move(den)));
}

void QuantumRational::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        var_.clear();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    if (num_.is_constant() && den_.is_constant()) var_.clear();
}

Rational QuantumRational::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant");
    return num_.constant_term(); // den is monic constant, i.e. 1
}

std::string QuantumRational::merged_var(const QuantumRational& a, const QuantumRational& b) {
    if (a.var_.empty()) return b.var_;
    if (b.var_.empty() || a.var_ == b.var_) return a.var_;
    throw std::invalid_argument("mismatched Novikov variables: \"" + a.var_ + "\" vs \"" + b.var_ + "\"");
}

QuantumRational QuantumRational::operator+(const QuantumRational& o) const {
    std::string v = merged_var(*this, o);
    return QuantumRational(std::move(v), num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QuantumRational QuantumRational::operator-(const QuantumRational& o) const { return *this + (-o); }

QuantumRational QuantumRational::operator-() const {
    QuantumRational r = *this;
    r.num_ = -r.num_;
    return r;
}

QuantumRational QuantumRational::operator*(const QuantumRational& o) const {
    std::string v = merged_var(*this, o);
    return QuantumRational(std::move(v), num_ * o.num_, den_ * o.den_);
}

QuantumRational QuantumRational::scaled(const Rational& c) const {
    if (c == 0) return {};
    QuantumRational r(var_, num_.scaled(c), den_);
    return r;
}

QuantumRational QuantumRational::substitute_inverse() const {
    if (is_constant()) return *this;
    const int m = std::max(num_.degree(), den_.degree());
    return QuantumRational(var_, num_.reversed(m), den_.reversed(m));
}

QuantumRational QuantumRational::with_variable(std::string var) const {
    if (is_constant()) return *this;
    return QuantumRational(std::move(var), num_, den_);
}

std::vector<Rational> QuantumRational::series_expand(int order) const {
    if (order < 0) throw std::invalid_argument("negative expansion order");
    const Rational d0 = den_.constant_term();
    if (d0 == 0) throw std::invalid_argument("denominator vanishes at 0; not expandable");
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Rational acc = num_.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= den_.coeff(j) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = acc / d0;
    }
    return out;
}

std::string QuantumRational::str() const {
    auto poly_str = [&](const Poly& p) {
        if (p.is_zero()) return std::string("0");
        std::string s;
        for (int k = 0; k <= p.degree(); ++k) {
            const Rational c = p.coeff(k);
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            const Rational a = abs(c);
            if (k == 0 || a != 1) s += to_string(a);
            if (k > 0) {
                if (a != 1) s += "*";
                s += var_.empty() ? "t" : var_;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    };
    if (den_ == Poly(Rational(1))) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

} // namespace oc
