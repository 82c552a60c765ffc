// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oc/resolve.hpp"
#include "oc/simplex.hpp"

using namespace oc;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    RationalMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = Rational(rows[i][j]);
    return m;
}

SignPattern sp(std::vector<int> signs) { return SignPattern{std::move(signs)}; }

RationalMatrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols) {
    std::uniform_int_distribution<int> cdist(-5, 5);
    RationalMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            m.at(i, j) = Rational(cdist(rng));
    return m;
}

} // namespace

TEST_CASE("simplex phase 1 on small systems") {
    // w1 + w2 = 2 has nonnegative solutions.
    auto a = from_rows({{1, 1}});
    auto w = simplex_feasible_point(a, {Rational(2)});
    REQUIRE(w.has_value());
    CHECK((*w)[0] + (*w)[1] == 2);
    CHECK((*w)[0] >= 0);
    CHECK((*w)[1] >= 0);

    // w1 + w2 = -1 has none.
    CHECK_FALSE(simplex_feasible_point(a, {Rational(-1)}).has_value());

    // Degenerate and redundant rows terminate (Bland's rule).
    auto b = from_rows({{1, 1}, {2, 2}});
    CHECK(simplex_feasible_point(b, {Rational(1), Rational(2)}).has_value());
    CHECK_FALSE(simplex_feasible_point(b, {Rational(1), Rational(3)}).has_value());
}

TEST_CASE("hand-checked sign pattern sets") {
    // Theta_1 + Theta_2 = 0 in H^3: exactly the mixed patterns survive.
    auto m = from_rows({{1, 1}});
    CHECK(feasible_patterns(m) ==
          std::vector<SignPattern>{sp({-1, 1}), sp({1, -1})});

    // Independent Thom classes: no kernel, no symplectic small resolution.
    auto id = from_rows({{1, 0}, {0, 1}});
    CHECK(feasible_patterns(id).empty());

    // Zero matrix: every pattern is realized.
    RationalMatrix z(1, 3);
    CHECK(feasible_patterns(z).size() == 8);

    // Chain of two relations.
    auto chain = from_rows({{1, 1, 0}, {0, 1, 1}});
    CHECK(feasible_patterns(chain) ==
          std::vector<SignPattern>{sp({-1, 1, -1}), sp({1, -1, 1})});
}

TEST_CASE("certificates witness feasibility exactly") {
    auto m = from_rows({{1, 1, 0}, {0, 1, 1}});
    for (const auto& sigma : feasible_patterns(m)) {
        auto v = pattern_certificate(m, sigma);
        REQUIRE(v.has_value());
        for (const auto& entry : mat_vec(m, *v))
            CHECK(entry == 0);
        for (size_t i = 0; i < sigma.signs.size(); ++i)
            CHECK(Rational(sigma.signs[i]) * (*v)[i] >= 1);
    }
    CHECK_FALSE(pattern_certificate(m, sp({1, 1, 1})).has_value());
}

TEST_CASE("resolution side convention") {
    CHECK(pattern_to_choice(sp({-1, 1})) == std::vector<Side>{Side::s, Side::sf});

    ConifoldConfig cfg;
    cfg.singularities = {validate_model(2, 1, Side::s), validate_model(3, 1, Side::s)};
    cfg.theta = from_rows({{1, 1}});
    auto res = symplectic_resolutions(cfg);
    REQUIRE(res.size() == 2);
    CHECK(res[0] == std::vector<Side>{Side::s, Side::sf});
    CHECK(res[1] == std::vector<Side>{Side::sf, Side::s});

    ConifoldConfig bad = cfg;
    bad.theta = RationalMatrix(1, 3); // shape mismatch with kappa = 2
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("negation closure and oracle containment on random matrices") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t kappa = 2 + static_cast<size_t>(trial % 5);
        const size_t rows = 1 + static_cast<size_t>(trial % 3);
        auto m = random_matrix(rng, rows, kappa);

        auto feas = feasible_patterns(m);
        CHECK(std::is_sorted(feas.begin(), feas.end()));

        for (const auto& sigma : feas)
            CHECK(std::binary_search(feas.begin(), feas.end(), sigma.negated()));

        for (const auto& sigma : sampling_oracle(m, 500, 1000 + static_cast<uint64_t>(trial)))
            CHECK(std::binary_search(feas.begin(), feas.end(), sigma));
    }
}

TEST_CASE("parallel enumeration agrees with the serial reference") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const size_t kappa = 3 + static_cast<size_t>(trial % 6);
        auto m = random_matrix(rng, 2, kappa);
        CHECK(feasible_patterns(m) == feasible_patterns_serial(m));
    }
}

TEST_CASE("kappa cap") {
    RationalMatrix z(1, 8);
    CHECK_THROWS_AS(feasible_patterns(z, 4), std::invalid_argument);
    CHECK(feasible_patterns(z, 8).size() == 256);
}
