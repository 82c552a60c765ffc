// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oc/local_model.hpp"

using namespace oc;

TEST_CASE("model validation") {
    CHECK_NOTHROW(validate_model(1, 0, Side::s));
    CHECK_NOTHROW(validate_model(5, 2, Side::sf));
    CHECK_THROWS_AS(validate_model(1, 1, Side::s), std::invalid_argument);
    CHECK_THROWS_AS(validate_model(4, 2, Side::s), std::invalid_argument);
    CHECK_THROWS_AS(validate_model(3, 3, Side::s), std::invalid_argument);
    CHECK_THROWS_AS(validate_model(0, 0, Side::s), std::invalid_argument);
}

TEST_CASE("degree shifting numbers") {
    CHECK(degree_shifting(3, 1) == Rational(4, 3));
    CHECK(degree_shifting(3, 2) == Rational(5, 3));
    CHECK(degree_shifting(2, 1) == Rational(3, 2));
    CHECK(degree_shifting(4, 4) == Rational(2)); // complementary bookkeeping
    for (int r = 2; r <= 50; ++r)
        for (int k = 1; k <= r - 1; ++k)
            CHECK(degree_shifting(r, k) + degree_shifting(r, r - k) == Rational(3));
    CHECK_THROWS_AS(degree_shifting(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(degree_shifting(3, 4), std::invalid_argument);
}

TEST_CASE("basis layout") {
    auto m1 = validate_model(1, 0, Side::s);
    auto basis1 = cr_basis(m1);
    REQUIRE(basis1.size() == 4); // 1, H, Tp, Tq
    CHECK(basis1[0].name == "1");
    CHECK(basis1[1].degree == Rational(2));
    CHECK(basis1[2].degree == Rational(6));

    auto m3 = validate_model(3, 1, Side::s);
    auto basis3 = cr_basis(m3);
    REQUIRE(basis3.size() == 8); // + p_1, p_2, q_1, q_2
    CHECK(basis3[4].name == "p_1");
    CHECK(basis3[4].degree == Rational(4, 3));
    CHECK(basis3[7].name == "q_2");
    CHECK(basis3[7].degree == Rational(5, 3));

    for (const auto& label : basis3)
        CHECK_NOTHROW(basis_class(m3, label.name));
    CHECK_THROWS(basis_class(m3, "bogus"));
}

TEST_CASE("twisting factors") {
    auto m = validate_model(5, 2, Side::s);
    auto t = twisting_factor(m, {SingularPoint::p, 1});
    CHECK(t.b == 2);
    CHECK(t.r_minus_b == 3);
    CHECK(t.k == 1);
    t = twisting_factor(m, {SingularPoint::q, 3});
    CHECK(t.b == 1); // 2*3 mod 5
    CHECK(t.r_minus_b == 4);
    CHECK_THROWS(twisting_factor(m, {SingularPoint::p, 5}));
}

TEST_CASE("product table obeys the sector support rules") {
    for (int r = 2; r <= 7; ++r) {
        for (int a = 1; a < r; ++a) {
            if (std::gcd(a, r) != 1) continue;
            auto m = validate_model(r, a, Side::s);
            auto one = CRClass::unit(r);
            auto h = CRClass::multiple_of_H(r, 1);

            CHECK(cr_product(m, one, h) == h); // unit law
            CHECK_THROWS_AS(cr_product(m, h, h), RequiresGlobalData);

            for (int i = 1; i <= r - 1; ++i) {
                auto pi = CRClass::twisted(r, SingularPoint::p, i);
                auto qi = CRClass::twisted(r, SingularPoint::q, i);
                CHECK(cr_product(m, h, pi).is_zero());  // H * twisted = 0
                CHECK(cr_product(m, pi, qi).is_zero()); // opposite points never meet
                CHECK(cr_product(m, one, pi) == pi);
                for (int j = 1; j <= r - 1; ++j) {
                    auto pj = CRClass::twisted(r, SingularPoint::p, j);
                    auto prod = cr_product(m, pi, pj);
                    CHECK(prod == cr_product(m, pj, pi)); // commutativity
                    if (i + j == r) {
                        CHECK(prod.c_theta_p == 1);
                        auto minus_theta = prod;
                        minus_theta.c_theta_p = 0;
                        CHECK(minus_theta.is_zero());
                    } else {
                        CHECK(prod.is_zero()); // delta_{i+j,r} support
                    }
                }
            }
        }
    }
}

TEST_CASE("virtual dimension bookkeeping") {
    auto m2 = validate_model(2, 1, Side::s);
    CHECK(virtual_dimension(m2, 2, {{SingularPoint::p, 1}}) == Rational(-1, 2));
    CHECK(virtual_dimension(m2, 2, {{SingularPoint::p, 1}, {SingularPoint::q, 1}}) == Rational(-1));
    auto m3 = validate_model(3, 1, Side::s);
    CHECK(virtual_dimension(m3, 3, {{SingularPoint::p, 1}}) == Rational(-1, 3));
    CHECK(virtual_dimension(m3, 3, {{SingularPoint::p, 1}, {SingularPoint::q, 2}}) == Rational(-1));

    // A single k = 1 insertion has dimension -1/r: never integral for r >= 2.
    for (int r = 2; r <= 10; ++r) {
        const Rational dim =
            virtual_dimension(validate_model(r, 1, Side::s), r, {{SingularPoint::p, 1}});
        CHECK(dim == Rational(-1, r));
        CHECK(denominator(dim) != 1);
    }

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 9);
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<TwistedSector> sectors;
        for (int i = 0; i < n; ++i) {
            const int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(r - 1));
            sectors.push_back({rng() % 2 ? SingularPoint::p : SingularPoint::q, k});
        }
        auto m = validate_model(r, 1, Side::s);
        CHECK(virtual_dimension(m, r, sectors) < 0);
    }
}

TEST_CASE("Gromov-Witten invariants of the extremal ray") {
    auto m2 = validate_model(2, 1, Side::s);
    CHECK(gw_invariant(m2, 4) == Rational(1, 8));
    CHECK(gw_invariant(m2, 3) == 0);
    CHECK(moduli_nonempty(m2, 6));
    CHECK_FALSE(moduli_nonempty(m2, 5));

    for (int r = 1; r <= 6; ++r) {
        auto m = validate_model(r, r == 1 ? 0 : 1, Side::s);
        for (int mm = 1; mm <= 10; ++mm)
            CHECK(gw_invariant(m, mm * r) == Rational(1, Int(mm) * mm * mm));
        for (int d = 1; d <= 60; ++d)
            if (d % r != 0) CHECK(gw_invariant(m, d) == 0);
    }

    CHECK(gw_twisted(m2, 2, {{SingularPoint::p, 1}}) == 0);
    CHECK_THROWS(gw_twisted(m2, 2, {}));
    CHECK_THROWS(gw_twisted(m2, 2, {{SingularPoint::p, 2}}));
}

TEST_CASE("classical three-point values") {
    auto m4 = validate_model(4, 1, Side::s);
    CHECK(cr_three_point_twisted(m4, "p_1", "p_3", "1") == Rational(1, 4));
    CHECK(cr_three_point_twisted(m4, "q_2", "q_2", "1") == Rational(1, 4));
    CHECK(cr_three_point_twisted(m4, "p_1", "p_2", "1") == 0);
    CHECK(cr_three_point_twisted(m4, "p_1", "q_3", "1") == 0);
    CHECK(cr_three_point_twisted(m4, "p_1", "p_3", "H") == 0);
    CHECK(classical_three_point_label(m4, "Tp", "1", "1") == Rational(1, 4));
    CHECK(classical_three_point_label(m4, "Tp", "H", "1") == Rational(0));
    CHECK_FALSE(classical_three_point_label(m4, "H", "H", "1").has_value());
    CHECK_THROWS(cr_three_point_twisted(m4, "H", "H", "1"));
}

TEST_CASE("quantum part matches the series oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 6);
        auto m = validate_model(r, r == 1 ? 0 : 1, Side::s);
        const int n1 = 1 + static_cast<int>(rng() % 5);
        const int n2 = 1 + static_cast<int>(rng() % 5);
        const int n3 = 1 + static_cast<int>(rng() % 5);

        auto v = quantum_three_point(m, CRClass::multiple_of_H(r, n1),
                                     CRClass::multiple_of_H(r, n2),
                                     CRClass::multiple_of_H(r, n3));
        CHECK(v.classical_symbolic);
        auto coeffs = v.quantum.series_expand(50);
        for (int d = 0; d <= 50; ++d) {
            const Rational want =
                d == 0 ? Rational(0)
                       : Rational(Int(n1) * d) * (Int(n2) * d) * (Int(n3) * d) * gw_invariant(m, d);
            CHECK(coeffs[static_cast<size_t>(d)] == want);
        }
    }
}

TEST_CASE("mixed insertions have no quantum correction") {
    auto m3 = validate_model(3, 2, Side::s);
    CHECK(ray_variable(m3) == "qs");
    CHECK(ray_variable(validate_model(3, 2, Side::sf)) == "qsf");

    auto v = quantum_three_point(m3, basis_class(m3, "p_1"), basis_class(m3, "p_2"),
                                 basis_class(m3, "1"));
    CHECK(v.quantum.is_zero());
    CHECK_FALSE(v.classical_symbolic);
    CHECK(v.classical == Rational(1, 3));

    v = quantum_three_point(m3, basis_class(m3, "H"), basis_class(m3, "H"),
                            basis_class(m3, "p_1"));
    CHECK(v.quantum.is_zero());
    CHECK(v.classical == 0);

    // 1 + H is degree-mixed, hence no correction even though H appears.
    auto mixed = CRClass::unit(3) + CRClass::multiple_of_H(3, 1);
    v = quantum_three_point(m3, mixed, CRClass::multiple_of_H(3, 1), CRClass::multiple_of_H(3, 1));
    CHECK(v.quantum.is_zero());
}
