// SPDX-License-Identifier: Apache-2.0
#ifndef OC_CONFIG_IO_HPP
#define OC_CONFIG_IO_HPP

#include <string>

#include <json.hpp>

#include "oc/flop.hpp"
#include "oc/geometry.hpp"
#include "oc/resolve.hpp"

namespace oc {

using Json = nlohmann::ordered_json;

// Thrown on schema violations; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json load_json_file(const std::string& path);

// Exact scalars travel as "p/q" strings (integers also accepted).
Rational rational_from_json(const Json& j, const std::string& context);
Json rational_to_json(const Rational& q);

RationalMatrix matrix_from_json(const Json& j, const std::string& context);
Json matrix_to_json(const RationalMatrix& m);

// {"kappa": n, "singularities": [{"r":.., "a":..}], "theta": [[..]]}
ConifoldConfig conifold_config_from_json(const Json& j);

GlobalRingData ring_from_json(const Json& j, const std::string& context);
FlopCorrespondence correspondence_from_json(const Json& j);
Json ring_to_json(const GlobalRingData& ring);
Json correspondence_to_json(const FlopCorrespondence& corr);

Json quantum_rational_to_json(const QuantumRational& f);

Json resolve_report(const ConifoldConfig& config, size_t cap);
Json local_flop_report_to_json(const LocalFlopReport& report, int r, int a);
Json ruan_report_to_json(const RuanIsoReport& report);
Json geometry_report_to_json(const GeometryReport& report);

} // namespace oc

#endif
