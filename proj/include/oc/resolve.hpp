// SPDX-License-Identifier: Apache-2.0
#ifndef OC_RESOLVE_HPP
#define OC_RESOLVE_HPP

#include <optional>
#include <vector>

#include "oc/local_model.hpp"
#include "oc/matrix.hpp"

namespace oc {

// Signs of the lambda_i in the cohomology relation; +1 or -1 per singular point.
struct SignPattern {
    std::vector<int> signs;
    bool operator==(const SignPattern& o) const = default;
    auto operator<=>(const SignPattern& o) const = default;
    SignPattern negated() const;
};

// kappa singular points with local parameters and the Thom-class coordinate
// matrix: column i holds Theta_{r_i} in a chosen basis of H^3(X, R).
struct ConifoldConfig {
    std::vector<LocalModel> singularities;
    RationalMatrix theta;

    size_t kappa() const { return singularities.size(); }
    void validate() const;
};

// True iff some v solves Mv = 0 with sigma_i v_i >= 1 (scale invariance of
// the kernel turns the open sign condition into this exact LP).
bool pattern_feasible(const RationalMatrix& m, const SignPattern& sigma);

// The kernel vector v witnessing feasibility, when one exists.
std::optional<std::vector<Rational>> pattern_certificate(const RationalMatrix& m,
                                                         const SignPattern& sigma);

inline constexpr size_t kDefaultKappaCap = 20;

// All feasible sign patterns, sorted; closed under global negation. Checks
// run in parallel when OpenMP is available.
std::vector<SignPattern> feasible_patterns(const RationalMatrix& m,
                                           size_t cap = kDefaultKappaCap);
// Single-threaded reference used for testing and benchmarking.
std::vector<SignPattern> feasible_patterns_serial(const RationalMatrix& m,
                                                  size_t cap = kDefaultKappaCap);

// Sign convention from the symplectic-form construction: lambda_i < 0 keeps
// the W^s chart at p_i, lambda_i > 0 switches to W^sf. Convention-dependent;
// reports flag it.
std::vector<Side> pattern_to_choice(const SignPattern& sigma);

std::vector<std::vector<Side>> symplectic_resolutions(const ConifoldConfig& config,
                                                      size_t cap = kDefaultKappaCap);

// Independent randomized oracle: sign patterns of random rational kernel
// combinations with no zero coordinate. Always a subset of the feasible set.
std::vector<SignPattern> sampling_oracle(const RationalMatrix& m, int trials, uint64_t seed);

} // namespace oc

#endif
