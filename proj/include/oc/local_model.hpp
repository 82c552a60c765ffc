// SPDX-License-Identifier: Apache-2.0
#ifndef OC_LOCAL_MODEL_HPP
#define OC_LOCAL_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "oc/quantum_rational.hpp"

namespace oc {

enum class Side { s, sf };

inline const char* side_name(Side s) { return s == Side::s ? "s" : "sf"; }

// One chart of an r-orbi-conifold small resolution. gcd(a, r) = 1 always;
// a = 0 is allowed only for the trivial group r = 1.
struct LocalModel {
    int r = 1;
    int a = 0;
    Side side = Side::s;
};

LocalModel validate_model(int r, int a, Side side);

enum class SingularPoint { p, q };

// Twisted sector k at one of the two singular points on the exceptional
// curve, 1 <= k <= r-1. k = r is accepted by the dimension bookkeeping only.
struct TwistedSector {
    SingularPoint point = SingularPoint::p;
    int k = 1;
};

// Element of the Chen-Ruan cohomology of a local model, over the ordered
// basis 1, H, Theta_p, Theta_q, [p]_1..[p]_{r-1}, [q]_1..[q]_{r-1}.
struct CRClass {
    Rational c_unit, c_H, c_theta_p, c_theta_q;
    std::vector<Rational> c_p, c_q; // length r-1

    static CRClass zero(int r);
    static CRClass unit(int r);
    static CRClass multiple_of_H(int r, const Rational& n);
    static CRClass twisted(int r, SingularPoint pt, int k);

    bool is_zero() const;
    // Nonzero only on the H coefficient.
    bool is_pure_degree2() const;
    // No twisted and no Theta component.
    bool is_untwisted() const;

    CRClass operator+(const CRClass& o) const;
    CRClass scaled(const Rational& c) const;
    bool operator==(const CRClass& o) const = default;
};

struct BasisLabel {
    std::string name;   // "1", "H", "Tp", "Tq", "p_k", "q_k"
    Rational degree;
};

// Degree shifting of the sector [.]_k: exactly 1 + k/r. Accepts k = r
// (value 2) for the complementary nodal-pair bookkeeping.
Rational degree_shifting(int r, int k);

std::vector<BasisLabel> cr_basis(const LocalModel& model);

// CRClass with a single basis coefficient 1, by label name.
CRClass basis_class(const LocalModel& model, const std::string& label);

// Exponents (b, r-b, k) of the twisting factor of [p]_k, with b = a*k mod r.
struct TwistingFactor {
    int b, r_minus_b, k;
};
TwistingFactor twisting_factor(const LocalModel& model, const TwistedSector& sector);

// Thrown when a product or three-point value needs the non-compact integral
// that only a global model supplies.
class RequiresGlobalData : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Chen-Ruan product. H*H is rejected with RequiresGlobalData.
CRClass cr_product(const LocalModel& model, const CRClass& x, const CRClass& y);

// k - sum_i (1 + k_i/r); strictly negative for nonempty sector lists.
Rational virtual_dimension(const LocalModel& model, int d, const std::vector<TwistedSector>& sectors);

// Degree-d stable maps exist iff r | d.
bool moduli_nonempty(const LocalModel& model, int d);

// 0 when r does not divide d, and 1/m^3 when d = m*r.
Rational gw_invariant(const LocalModel& model, int d);

// Invariants with twisted insertions vanish (negative virtual dimension).
Rational gw_twisted(const LocalModel& model, int d, const std::vector<TwistedSector>& sectors);

// Classical three-point value on basis labels when at least one input is
// twisted (or a Theta class); nullopt marks the pure {1, H} triples whose
// integral needs global data.
std::optional<Rational> classical_three_point_label(const LocalModel& model,
                                                    const std::string& l1,
                                                    const std::string& l2,
                                                    const std::string& l3);

Rational cr_three_point_twisted(const LocalModel& model,
                                const std::string& l1,
                                const std::string& l2,
                                const std::string& l3);

struct ThreePointValue {
    bool classical_symbolic = false; // true: classical part needs global pairing
    Rational classical;              // valid when !classical_symbolic
    QuantumRational quantum;         // in the model's ray variable
};

// Novikov variable name of the model's extremal ray.
std::string ray_variable(const LocalModel& model);

ThreePointValue quantum_three_point(const LocalModel& model,
                                    const CRClass& b1, const CRClass& b2, const CRClass& b3);

} // namespace oc

#endif
