// SPDX-License-Identifier: Apache-2.0
#ifndef OC_SIMPLEX_HPP
#define OC_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "oc/matrix.hpp"

namespace oc {

// Exact phase-1 simplex: finds w >= 0 with A w = b, or proves there is none.
// Bland's rule throughout, so the method terminates on every input.
std::optional<std::vector<Rational>> simplex_feasible_point(const RationalMatrix& a,
                                                            std::vector<Rational> b);

} // namespace oc

#endif
