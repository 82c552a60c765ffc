// SPDX-License-Identifier: Apache-2.0
#ifndef OC_GEOMETRY_HPP
#define OC_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "oc/rational.hpp"

namespace oc {

// Real coordinates (x1, x2, x3, x4, y1, y2, y3, y4) of C^4.
struct RealPoint {
    std::array<double, 8> c{};
    double& x(int i) { return c[static_cast<size_t>(i - 1)]; }
    double& y(int i) { return c[static_cast<size_t>(i + 3)]; }
    double x(int i) const { return c[static_cast<size_t>(i - 1)]; }
    double y(int i) const { return c[static_cast<size_t>(i + 3)]; }
};

using Vec8 = std::array<double, 8>;

// Bivariate polynomial with exact coefficients; grid[i][j] multiplies x^i y^j.
using BivarPoly = std::vector<std::vector<Rational>>;

BivarPoly bivar_mul(const BivarPoly& a, const BivarPoly& b);
BivarPoly bivar_add(const BivarPoly& a, const BivarPoly& b);

// Real and imaginary part of (x + iy)^r, as exact coefficient grids.
struct PolyPair {
    int r = 1;
    BivarPoly f, g;
};
PolyPair fg_polys(int r);

// f, g and their x3/y3 derivatives at a point, evaluated in doubles.
struct FGValue {
    double f, g, fx, fy, gx, gy;
};
FGValue fg_eval(int r, double x3, double y3);

// Residuals of the two defining equations of the deformed quadric.
std::pair<double, double> F_eval(int r, const RealPoint& p);

// Analytic gradients of F1, F2 in the (x1,x2,x3,x4,y1,y2,y3,y4) ordering.
std::pair<Vec8, Vec8> grad_F(int r, const RealPoint& p);

std::pair<Vec8, Vec8> grad_F_finite_difference(int r, const RealPoint& p, double step = 1e-5);

struct SampleConfig {
    uint64_t seed = 1;
    int count = 1000;
    double tol_eq = 1e-9;
    double tol_grad = 1e-6;
};

// Seeded points on the deformed quadric; residuals below tol_eq by
// construction. Throws when the rejection budget is exhausted.
std::vector<RealPoint> sample_Qr(int r, const SampleConfig& cfg);

// The x1 = x2 = x4 = 0 stratum (f = +-1, g = 0), which exercises the second
// branch of the rank argument.
std::vector<RealPoint> sample_Qr_degenerate(int r, const SampleConfig& cfg);

// Direct pairing -omega0(grad F1, grad F2) and the displayed closed form.
// The closed form is a cross-check only; see the certification report.
struct PairingValue {
    double numeric, closed_form;
};
PairingValue symplectic_pairing(int r, const RealPoint& p);

// Numerical rank of the 2x8 Jacobian via its singular values.
int jacobian_rank(int r, const RealPoint& p, double tol);

// Block rotation by 2*pi*a*power/r on (x1,x2),(y1,y2) and 2*pi*power/r on
// (x3,y3); identity on (x4,y4).
RealPoint mu_action(int r, int a, int power, const RealPoint& p);

// Exact symbolic check: x y - z^{2r} + t^2 is mu_r(a,-a,1,0)-invariant.
bool defining_poly_invariant(int r, int a);

// Leaf equations of the two foliations, as residual triples.
std::array<double, 3> w_leaf_residuals(int r, double lambda, const RealPoint& p);
std::array<double, 3> q_leaf_residuals(int r, double lambda, const RealPoint& p);

std::vector<RealPoint> sample_W_leaf(int r, double lambda, const SampleConfig& cfg);

// Leaf identification: principal r-th root in the (x3,y3) slot, norm
// rescaling elsewhere. Input must lie on the lambda leaf within tol.
RealPoint phi_r_map(int r, double lambda, const RealPoint& p, double tol = 1e-9);

// x_i -> x_i, y_i -> y_i (i != 3), (x3,y3) -> (f,g); lands on the r = 1 model.
RealPoint pi_projection(int r, const RealPoint& p);

struct GeometryReport {
    int r = 1;
    int a = 1;
    uint64_t seed = 1;
    int count = 0;
    double tol_eq = 1e-9, tol_grad = 1e-6;

    int samples = 0;
    double worst_residual = 0;        // |F1|, |F2| over samples
    double worst_grad_rel_err = 0;    // analytic vs central differences
    double min_abs_pairing = 0;       // min |numeric pairing|
    double worst_pairing_gap = 0;     // |numeric - closed_form|, informational
    int min_rank = 2;
    double worst_mu_invariance = 0;   // |F o mu - F|
    double worst_phi_residual = 0;    // target leaf residuals of phi_r_map
    double worst_pi_residual = 0;     // Q_1 residuals of projected samples
    bool defining_poly_ok = false;

    bool pass() const;
};

GeometryReport certify_geometry(int r, int a, const SampleConfig& cfg);
GeometryReport certify_geometry_serial(int r, int a, const SampleConfig& cfg);

} // namespace oc

#endif
