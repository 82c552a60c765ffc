// SPDX-License-Identifier: Apache-2.0
#include "oc/local_model.hpp"

#include <numeric>
#include <stdexcept>

namespace oc {

LocalModel validate_model(int r, int a, Side side) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (r == 1) {
        if (a != 0) throw std::invalid_argument("a must be 0 when r = 1");
        return {1, 0, side};
    }
    if (a < 1 || a >= r) throw std::invalid_argument("a out of range [1, r)");
    if (std::gcd(a, r) != 1) throw std::invalid_argument("gcd(a, r) must be 1");
    return {r, a, side};
}

Rational degree_shifting(int r, int k) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (k < 1 || k > r) throw std::invalid_argument("sector index out of range [1, r]");
    return Rational(1) + Rational(k, r);
}

std::vector<BasisLabel> cr_basis(const LocalModel& model) {
    std::vector<BasisLabel> basis{
        {"1", Rational(0)},
        {"H", Rational(2)},
        {"Tp", Rational(6)},
        {"Tq", Rational(6)},
    };
    for (int k = 1; k <= model.r - 1; ++k)
        basis.push_back({"p_" + std::to_string(k), degree_shifting(model.r, k)});
    for (int k = 1; k <= model.r - 1; ++k)
        basis.push_back({"q_" + std::to_string(k), degree_shifting(model.r, k)});
    return basis;
}

CRClass CRClass::zero(int r) {
    CRClass c;
    c.c_p.assign(static_cast<size_t>(r - 1), Rational(0));
    c.c_q.assign(static_cast<size_t>(r - 1), Rational(0));
    return c;
}

CRClass CRClass::unit(int r) {
    CRClass c = zero(r);
    c.c_unit = 1;
    return c;
}

CRClass CRClass::multiple_of_H(int r, const Rational& n) {
    CRClass c = zero(r);
    c.c_H = n;
    return c;
}

CRClass CRClass::twisted(int r, SingularPoint pt, int k) {
    if (k < 1 || k > r - 1) throw std::invalid_argument("twisted sector index out of range");
    CRClass c = zero(r);
    (pt == SingularPoint::p ? c.c_p : c.c_q)[static_cast<size_t>(k - 1)] = 1;
    return c;
}

bool CRClass::is_zero() const {
    if (c_unit != 0 || c_H != 0 || c_theta_p != 0 || c_theta_q != 0) return false;
    for (const auto& c : c_p) if (c != 0) return false;
    for (const auto& c : c_q) if (c != 0) return false;
    return true;
}

bool CRClass::is_pure_degree2() const {
    CRClass h = *this;
    h.c_H = 0;
    return c_H != 0 && h.is_zero();
}

bool CRClass::is_untwisted() const {
    for (const auto& c : c_p) if (c != 0) return false;
    for (const auto& c : c_q) if (c != 0) return false;
    return c_theta_p == 0 && c_theta_q == 0;
}

CRClass CRClass::operator+(const CRClass& o) const {
    if (c_p.size() != o.c_p.size()) throw std::invalid_argument("mixed local models");
    CRClass out = *this;
    out.c_unit += o.c_unit;
    out.c_H += o.c_H;
    out.c_theta_p += o.c_theta_p;
    out.c_theta_q += o.c_theta_q;
    for (size_t i = 0; i < c_p.size(); ++i) out.c_p[i] += o.c_p[i];
    for (size_t i = 0; i < c_q.size(); ++i) out.c_q[i] += o.c_q[i];
    return out;
}

CRClass CRClass::scaled(const Rational& c) const {
    CRClass out = *this;
    out.c_unit *= c;
    out.c_H *= c;
    out.c_theta_p *= c;
    out.c_theta_q *= c;
    for (auto& x : out.c_p) x *= c;
    for (auto& x : out.c_q) x *= c;
    return out;
}

CRClass basis_class(const LocalModel& model, const std::string& label) {
    if (label == "1") return CRClass::unit(model.r);
    if (label == "H") return CRClass::multiple_of_H(model.r, 1);
    if (label == "Tp" || label == "Tq") {
        CRClass c = CRClass::zero(model.r);
        (label == "Tp" ? c.c_theta_p : c.c_theta_q) = 1;
        return c;
    }
    if (label.size() > 2 && (label[0] == 'p' || label[0] == 'q') && label[1] == '_') {
        const int k = std::stoi(label.substr(2));
        return CRClass::twisted(model.r, label[0] == 'p' ? SingularPoint::p : SingularPoint::q, k);
    }
    throw std::invalid_argument("unknown basis label: \"" + label + "\"");
}

TwistingFactor twisting_factor(const LocalModel& model, const TwistedSector& sector) {
    if (sector.k < 1 || sector.k > model.r - 1)
        throw std::invalid_argument("twisted sector index out of range");
    const int b = (model.a * sector.k) % model.r;
    return {b, model.r - b, sector.k};
}

CRClass cr_product(const LocalModel& model, const CRClass& x, const CRClass& y) {
    if (x.c_H != 0 && y.c_H != 0)
        throw RequiresGlobalData("H*H on the local model requires global data");
    const int r = model.r;
    CRClass out = CRClass::zero(r);
    out.c_unit = x.c_unit * y.c_unit;
    out.c_H = x.c_unit * y.c_H + x.c_H * y.c_unit;
    out.c_theta_p = x.c_unit * y.c_theta_p + x.c_theta_p * y.c_unit;
    out.c_theta_q = x.c_unit * y.c_theta_q + x.c_theta_q * y.c_unit;
    for (int k = 1; k <= r - 1; ++k) {
        const size_t i = static_cast<size_t>(k - 1);
        out.c_p[i] = x.c_unit * y.c_p[i] + x.c_p[i] * y.c_unit;
        out.c_q[i] = x.c_unit * y.c_q[i] + x.c_q[i] * y.c_unit;
        // delta_{i+j,r} support: [.]_k pairs only with [.]_{r-k}
        const size_t j = static_cast<size_t>(r - k - 1);
        out.c_theta_p += x.c_p[i] * y.c_p[j];
        out.c_theta_q += x.c_q[i] * y.c_q[j];
    }
    return out;
}

Rational virtual_dimension(const LocalModel& model, int d, const std::vector<TwistedSector>& sectors) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    Rational dim(static_cast<int>(sectors.size()));
    for (const auto& s : sectors) dim -= degree_shifting(model.r, s.k);
    return dim;
}

bool moduli_nonempty(const LocalModel& model, int d) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    return d % model.r == 0;
}

Rational gw_invariant(const LocalModel& model, int d) {
    if (!moduli_nonempty(model, d)) return 0;
    const Int m = d / model.r;
    return Rational(1, m * m * m);
}

Rational gw_twisted(const LocalModel& model, int d, const std::vector<TwistedSector>& sectors) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    if (sectors.empty()) throw std::invalid_argument("sector list must be nonempty");
    for (const auto& s : sectors)
        if (s.k < 1 || s.k > model.r - 1)
            throw std::invalid_argument("twisted sector index out of range");
    return 0;
}

namespace {

struct LabelKind {
    enum Kind { unit, h, theta, twisted } kind;
    SingularPoint point = SingularPoint::p;
    int k = 0;
};

LabelKind classify(const std::string& l) {
    if (l == "1") return {LabelKind::unit};
    if (l == "H") return {LabelKind::h};
    if (l == "Tp") return {LabelKind::theta, SingularPoint::p};
    if (l == "Tq") return {LabelKind::theta, SingularPoint::q};
    if (l.size() > 2 && (l[0] == 'p' || l[0] == 'q') && l[1] == '_')
        return {LabelKind::twisted, l[0] == 'p' ? SingularPoint::p : SingularPoint::q,
                std::stoi(l.substr(2))};
    throw std::invalid_argument("unknown basis label: \"" + l + "\"");
}

} // namespace

std::optional<Rational> classical_three_point_label(const LocalModel& model,
                                                    const std::string& l1,
                                                    const std::string& l2,
                                                    const std::string& l3) {
    const LabelKind k1 = classify(l1), k2 = classify(l2), k3 = classify(l3);
    const LabelKind* ks[3] = {&k1, &k2, &k3};
    int n_twisted = 0, n_theta = 0, n_unit = 0;
    for (const auto* k : ks) {
        n_twisted += k->kind == LabelKind::twisted;
        n_theta += k->kind == LabelKind::theta;
        n_unit += k->kind == LabelKind::unit;
    }
    if (n_twisted > 0) {
        // Only ([p]_i, [p]_j, 1) and ([q]_i, [q]_j, 1) with i + j = r survive.
        if (n_twisted != 2 || n_unit != 1) return Rational(0);
        const LabelKind* tw[2];
        int t = 0;
        for (const auto* k : ks)
            if (k->kind == LabelKind::twisted) tw[t++] = k;
        if (tw[0]->point != tw[1]->point) return Rational(0);
        return tw[0]->k + tw[1]->k == model.r ? Rational(1, model.r) : Rational(0);
    }
    if (n_theta > 0) {
        // Thom classes have delta support; against two units they integrate
        // to the 1/r orbifold normalization, and vanish against anything of
        // positive degree.
        return n_theta == 1 && n_unit == 2 ? Rational(1, model.r) : Rational(0);
    }
    return std::nullopt; // pure {1, H} triple: non-compact integral
}

Rational cr_three_point_twisted(const LocalModel& model,
                                const std::string& l1,
                                const std::string& l2,
                                const std::string& l3) {
    const bool any_twisted = classify(l1).kind == LabelKind::twisted ||
                             classify(l2).kind == LabelKind::twisted ||
                             classify(l3).kind == LabelKind::twisted;
    if (!any_twisted) throw std::invalid_argument("at least one input must be twisted");
    return *classical_three_point_label(model, l1, l2, l3);
}

std::string ray_variable(const LocalModel& model) {
    return model.side == Side::s ? "qs" : "qsf";
}

namespace {

std::vector<std::pair<std::string, Rational>> decompose(const CRClass& c) {
    std::vector<std::pair<std::string, Rational>> out;
    if (c.c_unit != 0) out.emplace_back("1", c.c_unit);
    if (c.c_H != 0) out.emplace_back("H", c.c_H);
    if (c.c_theta_p != 0) out.emplace_back("Tp", c.c_theta_p);
    if (c.c_theta_q != 0) out.emplace_back("Tq", c.c_theta_q);
    for (size_t i = 0; i < c.c_p.size(); ++i)
        if (c.c_p[i] != 0) out.emplace_back("p_" + std::to_string(i + 1), c.c_p[i]);
    for (size_t i = 0; i < c.c_q.size(); ++i)
        if (c.c_q[i] != 0) out.emplace_back("q_" + std::to_string(i + 1), c.c_q[i]);
    return out;
}

} // namespace

ThreePointValue quantum_three_point(const LocalModel& model,
                                    const CRClass& b1, const CRClass& b2, const CRClass& b3) {
    ThreePointValue out;

    // Quantum corrections need three degree-2 insertions; the divisor axiom
    // kills every other combination.
    if (b1.is_pure_degree2() && b2.is_pure_degree2() && b3.is_pure_degree2()) {
        const Rational coeff = (b1.c_H * model.r) * (b2.c_H * model.r) * (b3.c_H * model.r);
        out.quantum = QuantumRational::geometric(ray_variable(model), coeff, model.r);
    }

    Rational classical = 0;
    for (const auto& [l1, c1] : decompose(b1))
        for (const auto& [l2, c2] : decompose(b2))
            for (const auto& [l3, c3] : decompose(b3)) {
                const auto v = classical_three_point_label(model, l1, l2, l3);
                if (!v) {
                    out.classical_symbolic = true;
                    continue;
                }
                classical += c1 * c2 * c3 * *v;
            }
    if (!out.classical_symbolic) out.classical = classical;
    return out;
}

} // namespace oc
