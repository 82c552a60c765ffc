// SPDX-License-Identifier: Apache-2.0
#include "oc/config_io.hpp"

#include <fstream>
#include <sstream>

namespace oc {

namespace {

const Json& require_field(const Json& j, const std::string& key, const std::string& context) {
    if (!j.is_object())
        throw ConfigError(context + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ConfigError(context + ": missing field '" + key + "'");
    return *it;
}

int int_from_json(const Json& j, const std::string& context) {
    if (!j.is_number_integer())
        throw ConfigError(context + ": expected an integer");
    return j.get<int>();
}

} // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return j;
}

Rational rational_from_json(const Json& j, const std::string& context) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ConfigError(context + ": " + e.what());
        }
    }
    throw ConfigError(context + ": expected an integer or a \"p/q\" string");
}

Json rational_to_json(const Rational& q) {
    return Json(to_string(q));
}

RationalMatrix matrix_from_json(const Json& j, const std::string& context) {
    if (!j.is_array() || j.empty())
        throw ConfigError(context + ": expected a non-empty array of rows");
    size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw ConfigError(context + "[0]: expected a non-empty row");
    size_t cols = j[0].size();
    RationalMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const std::string row_ctx = context + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols)
            throw ConfigError(row_ctx + ": expected a row of length " + std::to_string(cols));
        for (size_t k = 0; k < cols; ++k)
            m.at(i, k) = rational_from_json(j[i][k], row_ctx + "[" + std::to_string(k) + "]");
    }
    return m;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k)
            row.push_back(rational_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ConifoldConfig conifold_config_from_json(const Json& j) {
    ConifoldConfig cfg;
    const Json& sing = require_field(j, "singularities", "config");
    if (!sing.is_array() || sing.empty())
        throw ConfigError("config.singularities: expected a non-empty array");
    for (size_t i = 0; i < sing.size(); ++i) {
        const std::string ctx = "config.singularities[" + std::to_string(i) + "]";
        int r = int_from_json(require_field(sing[i], "r", ctx), ctx + ".r");
        int a = int_from_json(require_field(sing[i], "a", ctx), ctx + ".a");
        try {
            cfg.singularities.push_back(validate_model(r, a, Side::s));
        } catch (const std::exception& e) {
            throw ConfigError(ctx + ": " + e.what());
        }
    }
    if (j.contains("kappa")) {
        size_t kappa = static_cast<size_t>(int_from_json(j["kappa"], "config.kappa"));
        if (kappa != cfg.singularities.size())
            throw ConfigError("config.kappa: does not match the number of singularities");
    }
    cfg.theta = matrix_from_json(require_field(j, "theta", "config"), "config.theta");
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

GlobalRingData ring_from_json(const Json& j, const std::string& context) {
    GlobalRingData ring;
    const Json& basis = require_field(j, "basis", context);
    if (!basis.is_array() || basis.empty())
        throw ConfigError(context + ".basis: expected a non-empty array");
    for (size_t i = 0; i < basis.size(); ++i) {
        const std::string ctx = context + ".basis[" + std::to_string(i) + "]";
        GlobalBasisElement e;
        const Json& name = require_field(basis[i], "name", ctx);
        if (!name.is_string())
            throw ConfigError(ctx + ".name: expected a string");
        e.name = name.get<std::string>();
        e.degree = rational_from_json(require_field(basis[i], "degree", ctx), ctx + ".degree");
        if (basis[i].contains("support")) {
            const Json& sup = basis[i]["support"];
            if (!sup.is_array())
                throw ConfigError(ctx + ".support: expected an array of ray ids");
            for (const auto& s : sup)
                e.support.push_back(s.get<std::string>());
        }
        ring.basis.push_back(std::move(e));
    }

    ring.pairing = matrix_from_json(require_field(j, "pairing", context), context + ".pairing");

    const Json& rays = require_field(j, "rays", context);
    if (!rays.is_array())
        throw ConfigError(context + ".rays: expected an array");
    for (size_t i = 0; i < rays.size(); ++i) {
        const std::string ctx = context + ".rays[" + std::to_string(i) + "]";
        Ray ray;
        ray.id = require_field(rays[i], "id", ctx).get<std::string>();
        ray.multiplicity = int_from_json(require_field(rays[i], "r", ctx), ctx + ".r");
        if (ray.multiplicity < 1)
            throw ConfigError(ctx + ".r: must be positive");
        ring.rays.push_back(std::move(ray));
    }

    ring.ray_pairings.assign(ring.basis.size(),
                             std::vector<Rational>(ring.rays.size(), Rational(0)));
    if (j.contains("ray_pairings")) {
        const Json& rp = j["ray_pairings"];
        if (!rp.is_object())
            throw ConfigError(context + ".ray_pairings: expected an object keyed by label");
        for (const auto& [label, per_ray] : rp.items()) {
            size_t bi;
            try {
                bi = ring.index_of(label);
            } catch (const std::exception&) {
                throw ConfigError(context + ".ray_pairings: unknown label '" + label + "'");
            }
            if (!per_ray.is_object())
                throw ConfigError(context + ".ray_pairings." + label + ": expected an object");
            for (const auto& [ray_id, value] : per_ray.items()) {
                size_t ri;
                try {
                    ri = ring.ray_index(ray_id);
                } catch (const std::exception&) {
                    throw ConfigError(context + ".ray_pairings." + label + ": unknown ray '" +
                                      ray_id + "'");
                }
                ring.ray_pairings[bi][ri] =
                    rational_from_json(value, context + ".ray_pairings." + label + "." + ray_id);
            }
        }
    }

    const Json& classical = require_field(j, "classical", context);
    if (!classical.is_array())
        throw ConfigError(context + ".classical: expected an array");
    for (size_t i = 0; i < classical.size(); ++i) {
        const std::string ctx = context + ".classical[" + std::to_string(i) + "]";
        const Json& labels = require_field(classical[i], "labels", ctx);
        if (!labels.is_array() || labels.size() != 3)
            throw ConfigError(ctx + ".labels: expected three labels");
        std::array<size_t, 3> idx{};
        for (size_t k = 0; k < 3; ++k) {
            const std::string label = labels[k].get<std::string>();
            try {
                idx[k] = ring.index_of(label);
            } catch (const std::exception&) {
                throw ConfigError(ctx + ".labels: unknown label '" + label + "'");
            }
        }
        ring.set_classical(idx[0], idx[1], idx[2],
                           rational_from_json(require_field(classical[i], "value", ctx),
                                              ctx + ".value"));
    }

    try {
        ring.validate();
    } catch (const std::exception& e) {
        throw ConfigError(context + ": " + e.what());
    }
    return ring;
}

FlopCorrespondence correspondence_from_json(const Json& j) {
    FlopCorrespondence corr;
    if (j.contains("class_map")) {
        if (!j["class_map"].is_object())
            throw ConfigError("correspondence.class_map: expected an object");
        for (const auto& [from, to] : j["class_map"].items())
            corr.class_map[from] = to.get<std::string>();
    }
    if (j.contains("ray_map")) {
        if (!j["ray_map"].is_object())
            throw ConfigError("correspondence.ray_map: expected an object");
        for (const auto& [from, to] : j["ray_map"].items())
            corr.ray_map[from] = to.get<std::string>();
    }
    return corr;
}

Json ring_to_json(const GlobalRingData& ring) {
    Json j = Json::object();
    Json basis = Json::array();
    for (const auto& e : ring.basis) {
        Json item = Json::object();
        item["name"] = e.name;
        item["degree"] = rational_to_json(e.degree);
        item["support"] = e.support;
        basis.push_back(std::move(item));
    }
    j["basis"] = std::move(basis);
    j["pairing"] = matrix_to_json(ring.pairing);
    Json rays = Json::array();
    for (const auto& ray : ring.rays)
        rays.push_back(Json{{"id", ray.id}, {"r", ray.multiplicity}});
    j["rays"] = std::move(rays);
    Json rp = Json::object();
    for (size_t bi = 0; bi < ring.basis.size(); ++bi) {
        Json per_ray = Json::object();
        for (size_t ri = 0; ri < ring.rays.size(); ++ri)
            if (ring.ray_pairings[bi][ri] != 0)
                per_ray[ring.rays[ri].id] = rational_to_json(ring.ray_pairings[bi][ri]);
        if (!per_ray.empty())
            rp[ring.basis[bi].name] = std::move(per_ray);
    }
    j["ray_pairings"] = std::move(rp);
    Json classical = Json::array();
    for (const auto& [key, value] : ring.classical) {
        if (value == 0)
            continue;
        Json item = Json::object();
        item["labels"] = Json::array(
            {ring.basis[key[0]].name, ring.basis[key[1]].name, ring.basis[key[2]].name});
        item["value"] = rational_to_json(value);
        classical.push_back(std::move(item));
    }
    j["classical"] = std::move(classical);
    return j;
}

Json correspondence_to_json(const FlopCorrespondence& corr) {
    Json j = Json::object();
    j["class_map"] = Json::object();
    for (const auto& [from, to] : corr.class_map)
        j["class_map"][from] = to;
    j["ray_map"] = Json::object();
    for (const auto& [from, to] : corr.ray_map)
        j["ray_map"][from] = to;
    return j;
}

Json quantum_rational_to_json(const QuantumRational& f) {
    return Json(f.str());
}

Json resolve_report(const ConifoldConfig& config, size_t cap) {
    Json j = Json::object();
    j["kappa"] = config.kappa();
    Json sing = Json::array();
    for (const auto& s : config.singularities)
        sing.push_back(Json{{"r", s.r}, {"a", s.a}});
    j["singularities"] = std::move(sing);

    auto patterns = feasible_patterns(config.theta, cap);
    Json out = Json::array();
    for (const auto& sigma : patterns) {
        Json item = Json::object();
        item["signs"] = sigma.signs;
        Json sides = Json::array();
        for (Side side : pattern_to_choice(sigma))
            sides.push_back(side == Side::s ? "s" : "sf");
        item["resolution"] = std::move(sides);
        auto cert = pattern_certificate(config.theta, sigma);
        Json witness = Json::array();
        for (const auto& v : *cert)
            witness.push_back(rational_to_json(v));
        item["witness"] = std::move(witness);
        out.push_back(std::move(item));
    }
    j["feasible_patterns"] = std::move(out);
    j["symplectic_resolution_count"] = patterns.size();
    j["side_convention"] = "lambda_i < 0 keeps W^s at p_i; convention-dependent";
    return j;
}

Json local_flop_report_to_json(const LocalFlopReport& report, int r, int a) {
    Json j = Json::object();
    j["r"] = r;
    j["a"] = a;
    Json triples = Json::array();
    for (const auto& t : report.triples) {
        Json item = Json::object();
        item["labels"] = t.labels;
        item["classical_diff"] = rational_to_json(t.classical_diff);
        item["quantum_diff"] = quantum_rational_to_json(t.quantum_diff);
        item["ok"] = t.ok;
        triples.push_back(std::move(item));
    }
    j["triples"] = std::move(triples);
    j["all_ok"] = report.all_ok;
    return j;
}

Json ruan_report_to_json(const RuanIsoReport& report) {
    Json j = Json::object();
    Json mism = Json::array();
    for (const auto& m : report.mismatches) {
        Json item = Json::object();
        item["labels"] = m.labels;
        item["value_x"] = m.value_x;
        item["value_y"] = m.value_y;
        mism.push_back(std::move(item));
    }
    j["mismatches"] = std::move(mism);
    j["pairing_compatible"] = report.pairing_compatible;
    j["pass"] = report.pass;
    return j;
}

Json geometry_report_to_json(const GeometryReport& report) {
    Json j = Json::object();
    j["r"] = report.r;
    j["a"] = report.a;
    j["seed"] = report.seed;
    j["count"] = report.count;
    j["samples"] = report.samples;
    j["tol_eq"] = report.tol_eq;
    j["tol_grad"] = report.tol_grad;
    j["worst_residual"] = report.worst_residual;
    j["worst_grad_rel_err"] = report.worst_grad_rel_err;
    j["min_abs_pairing"] = report.min_abs_pairing;
    j["worst_pairing_gap"] = report.worst_pairing_gap;
    j["closed_form_note"] =
        "displayed closed form differs from the direct pairing; reported, not asserted";
    j["min_jacobian_rank"] = report.min_rank;
    j["worst_mu_invariance"] = report.worst_mu_invariance;
    j["worst_phi_residual"] = report.worst_phi_residual;
    j["worst_pi_residual"] = report.worst_pi_residual;
    j["defining_poly_invariant"] = report.defining_poly_ok;
    j["pass"] = report.pass();
    return j;
}

} // namespace oc
