// SPDX-License-Identifier: Apache-2.0
#ifndef OC_FLOP_HPP
#define OC_FLOP_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "oc/local_model.hpp"
#include "oc/matrix.hpp"

namespace oc {

struct GlobalBasisElement {
    std::string name;
    Rational degree;
    // Ray ids this class is supported near; empty means supported away from
    // every exceptional curve.
    std::vector<std::string> support;
};

struct Ray {
    std::string id;
    int multiplicity = 1; // r_i of the local chart
};

// User-supplied ring data of a compact orbifold: basis with grading, the
// Poincare pairing, the classical three-point table, and per-ray degree-2
// pairings b(Gamma_i).
struct GlobalRingData {
    std::vector<GlobalBasisElement> basis;
    RationalMatrix pairing;
    std::map<std::array<size_t, 3>, Rational> classical; // keys sorted ascending
    std::vector<Ray> rays;
    // ray_pairings[label][ray] = b(Gamma_ray); nonzero only for degree-2 labels.
    std::vector<std::vector<Rational>> ray_pairings;

    size_t index_of(const std::string& name) const;
    Rational classical_constant(size_t i, size_t j, size_t k) const;
    void set_classical(size_t i, size_t j, size_t k, const Rational& v);
    size_t ray_index(const std::string& id) const;
    void validate() const;
};

// Label and ray identification between the Y side and the X side of a flop.
// The ray sign convention [Gamma^s] <-> -[Gamma^sf] is implicit: quantum
// parts are compared after the Novikov substitution t -> 1/t.
struct FlopCorrespondence {
    std::map<std::string, std::string> class_map; // Y label -> X label
    std::map<std::string, std::string> ray_map;   // Y ray id -> X ray id
};

// Classical number plus one rational-function correction per ray.
struct RuanValue {
    Rational classical;
    std::map<std::string, QuantumRational> quantum;

    RuanValue operator+(const RuanValue& o) const;
    RuanValue scaled(const Rational& c) const;
    bool operator==(const RuanValue& o) const;
    std::string str() const;
};

// Transport a Y-side coefficient vector through the label correspondence.
std::vector<Rational> phi_map(const GlobalRingData& ring_y, const GlobalRingData& ring_x,
                              const FlopCorrespondence& corr, const std::vector<Rational>& coeffs);

struct TripleResult {
    std::array<std::string, 3> labels;
    Rational classical_diff;
    QuantumRational quantum_diff;
    bool ok = false;
};

struct LocalFlopReport {
    std::vector<TripleResult> triples;
    bool all_ok = true;
};

// Full check on one local model: for every basis triple the s-side
// three-point function of the transported classes equals the sf-side one
// under q -> 1/q.
LocalFlopReport local_flop_check(int r, int a);

RuanValue ruan_three_point(const GlobalRingData& ring,
                           const std::vector<Rational>& b1,
                           const std::vector<Rational>& b2,
                           const std::vector<Rational>& b3);

// Structure constants of the Ruan product: table[(i*n + j)][k] is the
// coefficient of basis element k in b_i *_r b_j.
std::vector<std::vector<RuanValue>> ruan_structure_constants(const GlobalRingData& ring);

struct RingMismatch {
    std::array<std::string, 3> labels;
    std::string value_x, value_y;
};

struct RuanIsoReport {
    std::vector<RingMismatch> mismatches;
    bool pairing_compatible = false;
    bool pass = false;
};

RuanIsoReport verify_ruan_isomorphism(const GlobalRingData& ring_x, const GlobalRingData& ring_y,
                                      const FlopCorrespondence& corr);

bool check_pairing_compatibility(const GlobalRingData& ring_x, const GlobalRingData& ring_y,
                                 const FlopCorrespondence& corr);

// Associativity of the Ruan product is not asserted by the theory here;
// failures are informational.
struct AssociativityReport {
    size_t checked = 0;
    size_t failures = 0;
};
AssociativityReport ruan_associativity_report(const GlobalRingData& ring);

// Synthetic compact ring pair assembled from local charts, one ray per
// chart, related by the flop transformation law. Used by tests and demos.
struct SyntheticFlopPair {
    GlobalRingData x, y;
    FlopCorrespondence corr;
};
SyntheticFlopPair synthetic_flop_pair(const std::vector<LocalModel>& charts, const Rational& hhh_x);

} // namespace oc

#endif
