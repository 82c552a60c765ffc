// SPDX-License-Identifier: Apache-2.0
#include "oc/resolve.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oc/simplex.hpp"

namespace oc {

SignPattern SignPattern::negated() const {
    SignPattern out = *this;
    for (auto& s : out.signs) s = -s;
    return out;
}

void ConifoldConfig::validate() const {
    if (singularities.empty()) throw std::invalid_argument("kappa must be >= 1");
    for (size_t i = 0; i < singularities.size(); ++i) {
        try {
            validate_model(singularities[i].r, singularities[i].a, singularities[i].side);
        } catch (const std::exception& e) {
            throw std::invalid_argument("singularity " + std::to_string(i) + ": " + e.what());
        }
    }
    if (theta.cols() != singularities.size())
        throw std::invalid_argument("theta matrix must have one column per singular point");
}

std::optional<std::vector<Rational>> pattern_certificate(const RationalMatrix& m,
                                                         const SignPattern& sigma) {
    const size_t kappa = m.cols();
    if (sigma.signs.size() != kappa) throw std::invalid_argument("sign pattern length mismatch");
    for (int s : sigma.signs)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");

    // Substitute w_i = sigma_i v_i - 1 >= 0: with A = M diag(sigma) the
    // condition Mv = 0 becomes A w = -A 1.
    RationalMatrix a(m.rows(), kappa);
    std::vector<Rational> b(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < kappa; ++j) {
            a.at(i, j) = m.at(i, j) * sigma.signs[j];
            b[i] -= a.at(i, j);
        }
    }
    const auto w = simplex_feasible_point(a, std::move(b));
    if (!w) return std::nullopt;
    std::vector<Rational> v(kappa);
    for (size_t j = 0; j < kappa; ++j) v[j] = ((*w)[j] + 1) * sigma.signs[j];
    return v;
}

bool pattern_feasible(const RationalMatrix& m, const SignPattern& sigma) {
    return pattern_certificate(m, sigma).has_value();
}

namespace {

SignPattern decode(uint64_t code, size_t kappa) {
    SignPattern p;
    p.signs.resize(kappa);
    for (size_t i = 0; i < kappa; ++i) p.signs[i] = (code >> i) & 1 ? -1 : 1;
    return p;
}

std::vector<SignPattern> enumerate_patterns(const RationalMatrix& m, size_t cap, bool parallel) {
    const size_t kappa = m.cols();
    if (kappa > cap) throw std::invalid_argument("kappa exceeds enumeration cap");
    if (kappa == 0) return {};

    // Negation closure halves the scan: only patterns whose last sign is +1
    // are solved, the mirror pattern is feasible iff the original is.
    const uint64_t half = uint64_t{1} << (kappa - 1);
    std::vector<char> feasible(half, 0);

#ifdef OC_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long code = 0; code < static_cast<long long>(half); ++code)
        feasible[static_cast<size_t>(code)] =
            pattern_feasible(m, decode(static_cast<uint64_t>(code), kappa));
    (void)parallel;

    std::vector<SignPattern> out;
    for (uint64_t code = 0; code < half; ++code)
        if (feasible[code]) {
            out.push_back(decode(code, kappa));
            out.push_back(out.back().negated());
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<SignPattern> feasible_patterns(const RationalMatrix& m, size_t cap) {
    return enumerate_patterns(m, cap, true);
}

std::vector<SignPattern> feasible_patterns_serial(const RationalMatrix& m, size_t cap) {
    return enumerate_patterns(m, cap, false);
}

std::vector<Side> pattern_to_choice(const SignPattern& sigma) {
    std::vector<Side> out(sigma.signs.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = sigma.signs[i] < 0 ? Side::s : Side::sf;
    return out;
}

std::vector<std::vector<Side>> symplectic_resolutions(const ConifoldConfig& config, size_t cap) {
    config.validate();
    std::vector<std::vector<Side>> out;
    for (const auto& sigma : feasible_patterns(config.theta, cap))
        out.push_back(pattern_to_choice(sigma));
    return out;
}

std::vector<SignPattern> sampling_oracle(const RationalMatrix& m, int trials, uint64_t seed) {
    const auto basis = kernel(m);
    std::set<SignPattern> found;
    if (!basis.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coeff(-9, 9);
        for (int t = 0; t < trials; ++t) {
            std::vector<Rational> v(m.cols());
            for (const auto& k : basis) {
                const int c = coeff(rng);
                if (c == 0) continue;
                for (size_t j = 0; j < v.size(); ++j) v[j] += Rational(c) * k[j];
            }
            SignPattern p;
            p.signs.reserve(v.size());
            bool ok = true;
            for (const auto& x : v) {
                if (x == 0) { ok = false; break; }
                p.signs.push_back(x > 0 ? 1 : -1);
            }
            if (ok && !p.signs.empty()) found.insert(std::move(p));
        }
    }
    return {found.begin(), found.end()};
}

} // namespace oc
