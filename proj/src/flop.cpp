// SPDX-License-Identifier: Apache-2.0
#include "oc/flop.hpp"

#include <algorithm>
#include <stdexcept>

namespace oc {

size_t GlobalRingData::index_of(const std::string& name) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == name) return i;
    throw std::invalid_argument("label missing from basis: \"" + name + "\"");
}

size_t GlobalRingData::ray_index(const std::string& id) const {
    for (size_t i = 0; i < rays.size(); ++i)
        if (rays[i].id == id) return i;
    throw std::invalid_argument("unknown ray: \"" + id + "\"");
}

Rational GlobalRingData::classical_constant(size_t i, size_t j, size_t k) const {
    std::array<size_t, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    const auto it = classical.find(key);
    return it == classical.end() ? Rational(0) : it->second;
}

void GlobalRingData::set_classical(size_t i, size_t j, size_t k, const Rational& v) {
    std::array<size_t, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    if (v == 0) classical.erase(key);
    else classical[key] = v;
}

void GlobalRingData::validate() const {
    const size_t n = basis.size();
    if (pairing.rows() != n || pairing.cols() != n)
        throw std::invalid_argument("pairing matrix shape does not match basis");
    if (!pairing.is_symmetric()) throw std::invalid_argument("pairing matrix not symmetric");
    if (ray_pairings.size() != n) throw std::invalid_argument("ray_pairings row count mismatch");
    for (const auto& row : ray_pairings)
        if (row.size() != rays.size()) throw std::invalid_argument("ray_pairings column count mismatch");
    for (size_t l = 0; l < n; ++l)
        for (size_t i = 0; i < rays.size(); ++i)
            if (ray_pairings[l][i] != 0 && basis[l].degree != 2)
                throw std::invalid_argument("ray pairing on non-degree-2 label \"" + basis[l].name + "\"");
    for (const auto& ray : rays)
        if (ray.multiplicity < 1) throw std::invalid_argument("ray multiplicity must be >= 1");
}

RuanValue RuanValue::operator+(const RuanValue& o) const {
    RuanValue out = *this;
    out.classical += o.classical;
    for (const auto& [ray, q] : o.quantum) {
        auto it = out.quantum.find(ray);
        if (it == out.quantum.end()) out.quantum[ray] = q;
        else it->second = it->second + q;
    }
    return out;
}

RuanValue RuanValue::scaled(const Rational& c) const {
    RuanValue out;
    out.classical = classical * c;
    if (c != 0)
        for (const auto& [ray, q] : quantum) out.quantum[ray] = q.scaled(c);
    return out;
}

bool RuanValue::operator==(const RuanValue& o) const {
    if (classical != o.classical) return false;
    auto nonzero = [](const std::map<std::string, QuantumRational>& m) {
        std::map<std::string, QuantumRational> out;
        for (const auto& [k, v] : m)
            if (!v.is_zero()) out.emplace(k, v);
        return out;
    };
    return nonzero(quantum) == nonzero(o.quantum);
}

std::string RuanValue::str() const {
    std::string s = to_string(classical);
    for (const auto& [ray, q] : quantum) {
        if (q.is_zero()) continue;
        s += " + [" + ray + "] " + q.str();
    }
    return s;
}

std::vector<Rational> phi_map(const GlobalRingData& ring_y, const GlobalRingData& ring_x,
                              const FlopCorrespondence& corr, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != ring_y.basis.size())
        throw std::invalid_argument("coefficient vector not in Y basis span");
    std::vector<Rational> out(ring_x.basis.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const auto it = corr.class_map.find(ring_y.basis[i].name);
        if (it == corr.class_map.end())
            throw std::invalid_argument("label missing from correspondence: \"" + ring_y.basis[i].name + "\"");
        const size_t xi = ring_x.index_of(it->second);
        if (ring_x.basis[xi].degree != ring_y.basis[i].degree)
            throw std::invalid_argument("degree-incompatible correspondence at \"" + ring_y.basis[i].name + "\"");
        out[xi] += coeffs[i];
    }
    return out;
}

LocalFlopReport local_flop_check(int r, int a) {
    const LocalModel ws = validate_model(r, a, Side::s);
    const LocalModel wsf = validate_model(r, a, Side::sf);
    const auto basis = cr_basis(ws);
    const std::string svar = ray_variable(ws);

    // phi is the identity on basis labels, but [Gamma^sf] = -[Gamma^s] in
    // homology, so the transported degree-2 class pairs with the sf-side
    // curve with a flipped sign.
    auto sf_class = [&](const std::string& label) {
        CRClass c = basis_class(wsf, label);
        c.c_H = -c.c_H;
        return c;
    };

    LocalFlopReport report;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i; j < basis.size(); ++j)
            for (size_t k = j; k < basis.size(); ++k) {
                const auto& l1 = basis[i].name;
                const auto& l2 = basis[j].name;
                const auto& l3 = basis[k].name;
                const auto vs = quantum_three_point(ws, basis_class(ws, l1), basis_class(ws, l2),
                                                    basis_class(ws, l3));
                const auto vsf = quantum_three_point(wsf, sf_class(l1), sf_class(l2), sf_class(l3));

                TripleResult res;
                res.labels = {l1, l2, l3};
                // Part (I): for degree-2 triples the classical parts differ by
                // the product of the ray pairings; otherwise they agree (both
                // symbolic or both the same twisted value).
                const bool all_h = l1 == "H" && l2 == "H" && l3 == "H";
                if (all_h) {
                    res.classical_diff = Rational(r) * Rational(r) * Rational(r);
                } else if (!vs.classical_symbolic && !vsf.classical_symbolic) {
                    res.classical_diff = vs.classical - vsf.classical;
                }
                // Part (II): transport the sf-side quantum correction through
                // [Gamma^s] <-> -[Gamma^sf], i.e. q -> 1/q in the s variable.
                const QuantumRational transported =
                    vsf.quantum.substitute_inverse().with_variable(svar);
                res.quantum_diff = vs.quantum - transported;
                res.ok = (res.quantum_diff + QuantumRational(res.classical_diff)).is_zero();
                report.all_ok = report.all_ok && res.ok;
                report.triples.push_back(std::move(res));
            }
    return report;
}

namespace {

bool pure_degree2(const GlobalRingData& ring, const std::vector<Rational>& v) {
    bool any = false;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (ring.basis[i].degree != 2) return false;
        any = true;
    }
    return any;
}

Rational ray_pairing_of(const GlobalRingData& ring, const std::vector<Rational>& v, size_t ray) {
    Rational acc = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc += v[i] * ring.ray_pairings[i][ray];
    return acc;
}

} // namespace

RuanValue ruan_three_point(const GlobalRingData& ring,
                           const std::vector<Rational>& b1,
                           const std::vector<Rational>& b2,
                           const std::vector<Rational>& b3) {
    const size_t n = ring.basis.size();
    if (b1.size() != n || b2.size() != n || b3.size() != n)
        throw std::invalid_argument("input not in basis span");

    RuanValue out;
    for (size_t i = 0; i < n; ++i) {
        if (b1[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b2[j] == 0) continue;
            for (size_t k = 0; k < n; ++k) {
                if (b3[k] == 0) continue;
                const Rational c = ring.classical_constant(i, j, k);
                if (c != 0) out.classical += b1[i] * b2[j] * b3[k] * c;
            }
        }
    }

    if (pure_degree2(ring, b1) && pure_degree2(ring, b2) && pure_degree2(ring, b3)) {
        for (size_t ri = 0; ri < ring.rays.size(); ++ri) {
            const int m = ring.rays[ri].multiplicity;
            const Rational coeff = (ray_pairing_of(ring, b1, ri) * m) *
                                   (ray_pairing_of(ring, b2, ri) * m) *
                                   (ray_pairing_of(ring, b3, ri) * m);
            if (coeff != 0)
                out.quantum[ring.rays[ri].id] = QuantumRational::geometric(ring.rays[ri].id, coeff, m);
        }
    }
    return out;
}

std::vector<std::vector<RuanValue>> ruan_structure_constants(const GlobalRingData& ring) {
    const size_t n = ring.basis.size();
    const RationalMatrix pinv = inverse(ring.pairing); // throws when singular
    std::vector<std::vector<RuanValue>> table(n * n);

    std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) e[i][i] = 1;

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<RuanValue> psi(n);
            for (size_t k = 0; k < n; ++k) psi[k] = ruan_three_point(ring, e[i], e[j], e[k]);
            std::vector<RuanValue> coeffs(n);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    if (pinv.at(k, l) != 0) coeffs[k] = coeffs[k] + psi[l].scaled(pinv.at(k, l));
            table[i * n + j] = std::move(coeffs);
        }
    return table;
}

bool check_pairing_compatibility(const GlobalRingData& ring_x, const GlobalRingData& ring_y,
                                 const FlopCorrespondence& corr) {
    if (ring_x.basis.size() != ring_y.basis.size()) return false;
    try {
        for (size_t i = 0; i < ring_y.basis.size(); ++i)
            for (size_t j = 0; j < ring_y.basis.size(); ++j) {
                const size_t xi = ring_x.index_of(corr.class_map.at(ring_y.basis[i].name));
                const size_t xj = ring_x.index_of(corr.class_map.at(ring_y.basis[j].name));
                if (ring_y.pairing.at(i, j) != ring_x.pairing.at(xi, xj)) return false;
            }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

namespace {

// Equality of three-point values across the flop: the X-side quantum parts
// are substituted q -> 1/q per ray; each per-ray difference must then be a
// constant, and the constants must cancel the classical difference.
bool flop_values_agree(const RuanValue& vx, const RuanValue& vy, const FlopCorrespondence& corr) {
    Rational residual = vx.classical - vy.classical;
    std::map<std::string, QuantumRational> diffs;
    for (const auto& [ray_x, qx] : vx.quantum) {
        std::string key = ray_x;
        diffs[key] = qx.substitute_inverse().with_variable(key);
    }
    for (const auto& [ray_y, qy] : vy.quantum) {
        const auto it = corr.ray_map.find(ray_y);
        const std::string key = it == corr.ray_map.end() ? ray_y : it->second;
        auto d = diffs.find(key);
        if (d == diffs.end()) diffs[key] = -qy.with_variable(key);
        else d->second = d->second - qy.with_variable(key);
    }
    for (const auto& [ray, d] : diffs) {
        if (!d.is_constant()) return false;
        residual += d.constant_value();
    }
    return residual == 0;
}

} // namespace

RuanIsoReport verify_ruan_isomorphism(const GlobalRingData& ring_x, const GlobalRingData& ring_y,
                                      const FlopCorrespondence& corr) {
    const size_t n = ring_y.basis.size();
    if (ring_x.basis.size() != n) throw std::invalid_argument("basis size mismatch");

    RuanIsoReport report;
    report.pairing_compatible = check_pairing_compatibility(ring_x, ring_y, corr);

    std::vector<std::vector<Rational>> ey(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) ey[i][i] = 1;
    std::vector<std::vector<Rational>> ex(n);
    for (size_t i = 0; i < n; ++i) ex[i] = phi_map(ring_y, ring_x, corr, ey[i]);

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) {
                const RuanValue vy = ruan_three_point(ring_y, ey[i], ey[j], ey[k]);
                const RuanValue vx = ruan_three_point(ring_x, ex[i], ex[j], ex[k]);
                if (!flop_values_agree(vx, vy, corr)) {
                    report.mismatches.push_back(
                        {{ring_y.basis[i].name, ring_y.basis[j].name, ring_y.basis[k].name},
                         vx.str(), vy.str()});
                }
            }
    report.pass = report.pairing_compatible && report.mismatches.empty();
    return report;
}

AssociativityReport ruan_associativity_report(const GlobalRingData& ring) {
    const size_t n = ring.basis.size();
    const auto table = ruan_structure_constants(ring);
    AssociativityReport rep;

    // Compare classical parts of (b_i * b_j) * b_k against b_i * (b_j * b_k),
    // contracting rational-function coefficients only through their constant
    // classical data. Quantum coefficients are ignored here: mixing them
    // would require products across rays, which this artifact does not form.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                ++rep.checked;
                bool same = true;
                for (size_t m = 0; m < n && same; ++m) {
                    Rational lhs = 0, rhs = 0;
                    for (size_t l = 0; l < n; ++l) {
                        lhs += table[i * n + j][l].classical * table[l * n + k][m].classical;
                        rhs += table[j * n + k][l].classical * table[i * n + l][m].classical;
                    }
                    same = lhs == rhs;
                }
                if (!same) ++rep.failures;
            }
    return rep;
}

SyntheticFlopPair synthetic_flop_pair(const std::vector<LocalModel>& charts, const Rational& hhh_x) {
    SyntheticFlopPair out;
    auto build = [&](bool x_side) {
        GlobalRingData ring;
        ring.basis = {{"1", Rational(0), {}},
                      {"H", Rational(2), {}},
                      {"K", Rational(4), {}},
                      {"T", Rational(6), {}}};
        for (size_t u = 0; u < charts.size(); ++u) {
            const std::string ray = "g" + std::to_string(u + 1);
            ring.rays.push_back({ray, charts[u].r});
            for (int k = 1; k <= charts[u].r - 1; ++k) {
                const std::string suffix = std::to_string(u + 1) + "_" + std::to_string(k);
                ring.basis.push_back({"p" + suffix, degree_shifting(charts[u].r, k), {ray}});
                ring.basis.push_back({"q" + suffix, degree_shifting(charts[u].r, k), {ray}});
            }
        }
        const size_t n = ring.basis.size();
        ring.pairing = RationalMatrix(n, n);
        ring.ray_pairings.assign(n, std::vector<Rational>(charts.size()));

        const size_t i1 = ring.index_of("1"), ih = ring.index_of("H");
        const size_t ik = ring.index_of("K"), it = ring.index_of("T");
        ring.pairing.at(i1, it) = ring.pairing.at(it, i1) = 1;
        ring.pairing.at(ih, ik) = ring.pairing.at(ik, ih) = 1;
        for (size_t u = 0; u < charts.size(); ++u) {
            const int r = charts[u].r;
            ring.ray_pairings[ih][u] = x_side ? 1 : -1;
            for (int k = 1; k <= r - 1; ++k) {
                for (const char* pt : {"p", "q"}) {
                    const size_t a = ring.index_of(pt + std::to_string(u + 1) + "_" + std::to_string(k));
                    const size_t b = ring.index_of(pt + std::to_string(u + 1) + "_" + std::to_string(r - k));
                    ring.pairing.at(a, b) = Rational(1, r);
                }
            }
        }

        // Classical table: unit row reproduces the pairing; (H,H,H) carries
        // the only model-dependent value. Twisted sectors pair only against
        // their complement at the same chart.
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a; b < n; ++b)
                if (ring.pairing.at(a, b) != 0) ring.set_classical(i1, a, b, ring.pairing.at(a, b));
        Rational hhh = hhh_x;
        if (!x_side)
            for (const auto& chart : charts) {
                const Rational rr(chart.r);
                hhh -= rr * rr * rr; // Part (I) of the flop difference, per chart
            }
        ring.set_classical(ih, ih, ih, hhh);
        ring.validate();
        return ring;
    };
    out.x = build(true);
    out.y = build(false);
    for (const auto& b : out.y.basis) out.corr.class_map[b.name] = b.name;
    for (const auto& ray : out.y.rays) out.corr.ray_map[ray.id] = ray.id;
    return out;
}

} // namespace oc
