// SPDX-License-Identifier: Apache-2.0
#include "oc/geometry.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace oc {

namespace {

constexpr double kPi = 3.14159265358979323846;

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

BivarPoly bivar_add(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out(std::max(a.size(), b.size()));
    size_t cols = 0;
    for (const auto& row : a) cols = std::max(cols, row.size());
    for (const auto& row : b) cols = std::max(cols, row.size());
    for (auto& row : out) row.assign(cols, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += a[i][j];
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

BivarPoly bivar_mul(const BivarPoly& a, const BivarPoly& b) {
    size_t ar = a.size(), br = b.size();
    size_t ac = 0, bc = 0;
    for (const auto& row : a) ac = std::max(ac, row.size());
    for (const auto& row : b) bc = std::max(bc, row.size());
    if (ar == 0 || br == 0 || ac == 0 || bc == 0) return {};
    BivarPoly out(ar + br - 1, std::vector<Rational>(ac + bc - 1, Rational(0)));
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j] == 0) continue;
            for (size_t k = 0; k < br; ++k)
                for (size_t l = 0; l < b[k].size(); ++l)
                    out[i + k][j + l] += a[i][j] * b[k][l];
        }
    return out;
}

PolyPair fg_polys(int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    PolyPair out;
    out.r = r;
    const size_t n = static_cast<size_t>(r) + 1;
    out.f.assign(n, std::vector<Rational>(n, Rational(0)));
    out.g.assign(n, std::vector<Rational>(n, Rational(0)));
    // (x + iy)^r = sum_k C(r,k) x^{r-k} (iy)^k; i^k cycles 1, i, -1, -i.
    Int binom = 1;
    for (int k = 0; k <= r; ++k) {
        const Rational c(k % 4 < 2 ? binom : -binom);
        if (k % 2 == 0) out.f[static_cast<size_t>(r - k)][static_cast<size_t>(k)] = c;
        else out.g[static_cast<size_t>(r - k)][static_cast<size_t>(k)] = c;
        binom = binom * (r - k) / (k + 1);
    }
    return out;
}

FGValue fg_eval(int r, double x3, double y3) {
    const std::complex<double> z(x3, y3);
    std::complex<double> zpow(1, 0);
    for (int k = 0; k < r - 1; ++k) zpow *= z;
    const std::complex<double> d = static_cast<double>(r) * zpow; // r z^{r-1}
    const std::complex<double> w = zpow * z;                      // z^r
    // Cauchy-Riemann: f_y = -g_x, g_y = f_x.
    return {w.real(), w.imag(), d.real(), -d.imag(), d.imag(), d.real()};
}

std::pair<double, double> F_eval(int r, const RealPoint& p) {
    const FGValue v = fg_eval(r, p.x(3), p.y(3));
    const double f1 = p.x(1) * p.x(1) + p.x(2) * p.x(2) + v.f * v.f + p.x(4) * p.x(4) - 1.0;
    const double f2 = p.x(1) * p.y(1) + p.x(2) * p.y(2) + v.f * v.g + p.x(4) * p.y(4);
    return {f1, f2};
}

std::pair<Vec8, Vec8> grad_F(int r, const RealPoint& p) {
    const FGValue v = fg_eval(r, p.x(3), p.y(3));
    Vec8 g1{2 * p.x(1), 2 * p.x(2), 2 * v.f * v.fx, 2 * p.x(4),
            0, 0, 2 * v.f * v.fy, 0};
    Vec8 g2{p.y(1), p.y(2), v.f * v.gx + v.g * v.fx, p.y(4),
            p.x(1), p.x(2), v.f * v.gy + v.g * v.fy, p.x(4)};
    return {g1, g2};
}

std::pair<Vec8, Vec8> grad_F_finite_difference(int r, const RealPoint& p, double step) {
    Vec8 g1{}, g2{};
    for (int i = 0; i < 8; ++i) {
        RealPoint hi = p, lo = p;
        hi.c[static_cast<size_t>(i)] += step;
        lo.c[static_cast<size_t>(i)] -= step;
        const auto [f1p, f2p] = F_eval(r, hi);
        const auto [f1m, f2m] = F_eval(r, lo);
        g1[static_cast<size_t>(i)] = (f1p - f1m) / (2 * step);
        g2[static_cast<size_t>(i)] = (f2p - f2m) / (2 * step);
    }
    return {g1, g2};
}

namespace {

// Completes n (nonzero) to an orthonormal frame of R^3 and returns the two
// tangent vectors.
std::pair<std::array<double, 3>, std::array<double, 3>> tangent_frame(const std::array<double, 3>& n) {
    std::array<double, 3> u = std::abs(n[0]) < 0.5 ? std::array<double, 3>{1, 0, 0}
                                                   : std::array<double, 3>{0, 1, 0};
    const double nn = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
    const double un = (u[0] * n[0] + u[1] * n[1] + u[2] * n[2]) / nn;
    std::array<double, 3> t1{u[0] - un * n[0], u[1] - un * n[1], u[2] - un * n[2]};
    const double t1n = std::sqrt(t1[0] * t1[0] + t1[1] * t1[1] + t1[2] * t1[2]);
    for (auto& x : t1) x /= t1n;
    const double s = std::sqrt(nn);
    std::array<double, 3> t2{(n[1] * t1[2] - n[2] * t1[1]) / s,
                             (n[2] * t1[0] - n[0] * t1[2]) / s,
                             (n[0] * t1[1] - n[1] * t1[0]) / s};
    return {t1, t2};
}

// Generic leaf sampler shared by the quadric (lambda = 1 for the x block)
// and the W leaves: x-norm^2 = sx, y-norm^2 constrained to sy when
// constrain_y is set, cross term = -f*g always.
RealPoint sample_leaf_point(int r, double sx, bool constrain_y, double sy, std::mt19937_64& rng,
                            int budget) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const double disk = std::pow(sx, 1.0 / (2 * r)) * 0.995;
    for (int attempt = 0; attempt < budget; ++attempt) {
        const double x3 = disk * unif(rng), y3 = disk * unif(rng);
        const FGValue v = fg_eval(r, x3, y3);
        if (v.f * v.f >= sx || (constrain_y && v.f * v.f + v.g * v.g >= sx)) continue;

        std::array<double, 3> n{gauss(rng), gauss(rng), gauss(rng)};
        const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        if (nn < 1e-8) continue;
        const double radius = std::sqrt(sx - v.f * v.f);
        for (auto& x : n) x *= radius / nn;

        const double n2 = radius * radius;
        std::array<double, 3> y{-v.f * v.g * n[0] / n2, -v.f * v.g * n[1] / n2,
                                -v.f * v.g * n[2] / n2};
        auto [t1, t2] = tangent_frame(n);
        double c1, c2;
        if (constrain_y) {
            const double rho2 = sy - v.g * v.g - v.f * v.f * v.g * v.g / n2;
            if (rho2 <= 0) continue;
            const double theta = kPi * unif(rng);
            c1 = std::sqrt(rho2) * std::cos(theta);
            c2 = std::sqrt(rho2) * std::sin(theta);
        } else {
            c1 = gauss(rng);
            c2 = gauss(rng);
        }
        for (int i = 0; i < 3; ++i) y[static_cast<size_t>(i)] += c1 * t1[static_cast<size_t>(i)] + c2 * t2[static_cast<size_t>(i)];

        RealPoint p;
        p.x(1) = n[0];
        p.x(2) = n[1];
        p.x(4) = n[2];
        p.x(3) = x3;
        p.y(1) = y[0];
        p.y(2) = y[1];
        p.y(4) = y[2];
        p.y(3) = y3;
        return p;
    }
    throw std::runtime_error("rejection budget exhausted");
}

} // namespace

std::vector<RealPoint> sample_Qr(int r, const SampleConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<RealPoint> out;
    out.reserve(static_cast<size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i)
        out.push_back(sample_leaf_point(r, 1.0, false, 0.0, rng, 10000));
    return out;
}

std::vector<RealPoint> sample_Qr_degenerate(int r, const SampleConfig& cfg) {
    std::mt19937_64 rng(cfg.seed ^ 0x5eedull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> root(0, 2 * r - 1);
    std::vector<RealPoint> out;
    out.reserve(static_cast<size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i) {
        // x1 = x2 = x4 = 0 forces f = +-1, g = 0: x3 + i y3 is a (2r)-th
        // root of unity.
        const double angle = kPi * root(rng) / r;
        RealPoint p;
        p.x(3) = std::cos(angle);
        p.y(3) = std::sin(angle);
        p.y(1) = gauss(rng);
        p.y(2) = gauss(rng);
        p.y(4) = gauss(rng);
        out.push_back(p);
    }
    return out;
}

PairingValue symplectic_pairing(int r, const RealPoint& p) {
    const auto [g1, g2] = grad_F(r, p);
    double numeric = 0;
    for (int i = 0; i < 4; ++i)
        numeric += g1[static_cast<size_t>(i)] * g2[static_cast<size_t>(i + 4)] -
                   g2[static_cast<size_t>(i)] * g1[static_cast<size_t>(i + 4)];
    const FGValue v = fg_eval(r, p.x(3), p.y(3));
    const double closed = 2 * p.x(1) * p.x(1) + 2 * p.x(2) * p.x(2) +
                          2 * v.f * (v.fx * v.fx + v.gx * v.gx) + 2 * p.x(4) * p.x(4);
    return {numeric, closed};
}

int jacobian_rank(int r, const RealPoint& p, double tol) {
    const auto [g1, g2] = grad_F(r, p);
    double a = 0, b = 0, d = 0;
    for (size_t i = 0; i < 8; ++i) {
        a += g1[i] * g1[i];
        b += g1[i] * g2[i];
        d += g2[i] * g2[i];
    }
    // Singular values of the 2x8 Jacobian from the 2x2 Gram matrix.
    const double tr = a + d;
    const double disc = std::sqrt(std::max((a - d) * (a - d) + 4 * b * b, 0.0));
    const double l1 = (tr + disc) / 2, l2 = (tr - disc) / 2;
    int rank = 0;
    if (std::sqrt(std::max(l1, 0.0)) > tol) ++rank;
    if (std::sqrt(std::max(l2, 0.0)) > tol) ++rank;
    return rank;
}

RealPoint mu_action(int r, int a, int power, const RealPoint& p) {
    const double phi = 2 * kPi * a * power / r;
    const double psi = 2 * kPi * power / r;
    const double c1 = std::cos(phi), s1 = std::sin(phi);
    const double c3 = std::cos(psi), s3 = std::sin(psi);
    RealPoint q = p;
    q.x(1) = c1 * p.x(1) - s1 * p.x(2);
    q.x(2) = s1 * p.x(1) + c1 * p.x(2);
    q.y(1) = c1 * p.y(1) - s1 * p.y(2);
    q.y(2) = s1 * p.y(1) + c1 * p.y(2);
    q.x(3) = c3 * p.x(3) - s3 * p.y(3);
    q.y(3) = s3 * p.x(3) + c3 * p.y(3);
    return q;
}

bool defining_poly_invariant(int r, int a) {
    // Monomial weights under mu_r(a, -a, 1, 0): each term of
    // x y - z^{2r} + t^2 must have weight 0 mod r.
    const int w_xy = ((a + (r - a % r)) % r + r) % r;
    const int w_z = (2 * r) % r;
    const int w_t = 0;
    return w_xy == 0 && w_z == 0 && w_t == 0;
}

std::array<double, 3> w_leaf_residuals(int r, double lambda, const RealPoint& p) {
    const FGValue v = fg_eval(r, p.x(3), p.y(3));
    return {p.x(1) * p.x(1) + p.x(2) * p.x(2) + v.f * v.f + p.x(4) * p.x(4) - lambda,
            p.y(1) * p.y(1) + p.y(2) * p.y(2) + v.g * v.g + p.y(4) * p.y(4) - lambda,
            p.x(1) * p.y(1) + p.x(2) * p.y(2) + v.f * v.g + p.x(4) * p.y(4)};
}

std::array<double, 3> q_leaf_residuals(int r, double lambda, const RealPoint& p) {
    const FGValue v = fg_eval(r, p.x(3), p.y(3));
    return {p.x(1) * p.x(1) + p.x(2) * p.x(2) + v.f * v.f + p.x(4) * p.x(4) - 1.0,
            p.y(1) * p.y(1) + p.y(2) * p.y(2) + v.g * v.g + p.y(4) * p.y(4) - lambda * lambda,
            p.x(1) * p.y(1) + p.x(2) * p.y(2) + v.f * v.g + p.x(4) * p.y(4)};
}

std::vector<RealPoint> sample_W_leaf(int r, double lambda, const SampleConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<RealPoint> out;
    out.reserve(static_cast<size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i)
        out.push_back(sample_leaf_point(r, lambda, true, lambda, rng, 10000));
    return out;
}

RealPoint phi_r_map(int r, double lambda, const RealPoint& p, double tol) {
    const auto res = w_leaf_residuals(r, lambda, p);
    for (double x : res)
        if (std::abs(x) > tol) throw std::invalid_argument("point not on the W leaf");

    const double s = std::sqrt(lambda);
    const FGValue v = fg_eval(r, p.x(3), p.y(3));
    // Principal r-th root of f/s + i g s.
    const std::complex<double> target(v.f / s, v.g * s);
    const std::complex<double> uv = std::pow(target, 1.0 / r);

    RealPoint q;
    q.x(1) = p.x(1) / s;
    q.x(2) = p.x(2) / s;
    q.x(4) = p.x(4) / s;
    q.y(1) = p.y(1) * s;
    q.y(2) = p.y(2) * s;
    q.y(4) = p.y(4) * s;
    q.x(3) = uv.real();
    q.y(3) = uv.imag();
    return q;
}

RealPoint pi_projection(int r, const RealPoint& p) {
    const FGValue v = fg_eval(r, p.x(3), p.y(3));
    RealPoint q = p;
    q.x(3) = v.f;
    q.y(3) = v.g;
    return q;
}

bool GeometryReport::pass() const {
    return samples == count && defining_poly_ok && worst_residual < tol_eq &&
           worst_grad_rel_err < tol_grad && min_abs_pairing > 1e-8 && min_rank == 2 &&
           worst_mu_invariance < 1e-12 && worst_phi_residual < tol_eq &&
           worst_pi_residual < tol_eq;
}

namespace {

struct PointChecks {
    double residual = 0, grad_rel = 0, abs_pairing = 1e300, pairing_gap = 0;
    int rank = 2;
    double mu_inv = 0, phi_res = 0, pi_res = 0;
};

PointChecks check_index(int r, int a, const SampleConfig& cfg, uint64_t index) {
    SampleConfig one = cfg;
    one.count = 1;
    // Golden-ratio stride keeps the per-index streams of nearby master seeds
    // disjoint (seed + index would alias seed' = seed + 1 at index - 1).
    one.seed = splitmix64(cfg.seed * 0x9e3779b97f4a7c15ull + index);
    PointChecks out;

    // Every tenth point comes from the degenerate stratum.
    const RealPoint p = (index % 10 == 9) ? sample_Qr_degenerate(r, one)[0] : sample_Qr(r, one)[0];

    const auto [f1, f2] = F_eval(r, p);
    out.residual = std::max(std::abs(f1), std::abs(f2));

    const auto [a1, a2] = grad_F(r, p);
    const auto [n1, n2] = grad_F_finite_difference(r, p);
    for (size_t i = 0; i < 8; ++i) {
        const double d1 = std::abs(a1[i] - n1[i]) / std::max(1.0, std::abs(a1[i]));
        const double d2 = std::abs(a2[i] - n2[i]) / std::max(1.0, std::abs(a2[i]));
        out.grad_rel = std::max({out.grad_rel, d1, d2});
    }

    const PairingValue pv = symplectic_pairing(r, p);
    out.abs_pairing = std::abs(pv.numeric);
    out.pairing_gap = std::abs(pv.numeric - pv.closed_form);
    out.rank = jacobian_rank(r, p, 1e-8);

    std::mt19937_64 rng(splitmix64(one.seed ^ 0xabcdull));
    std::uniform_int_distribution<int> pow_dist(1, r);
    const RealPoint q = mu_action(r, a, pow_dist(rng), p);
    const auto [m1, m2] = F_eval(r, q);
    out.mu_inv = std::max(std::abs(m1 - f1), std::abs(m2 - f2));

    const double lambdas[3] = {0.5, 1.0, 2.0};
    const double lambda = lambdas[index % 3];
    const RealPoint wp = sample_W_leaf(r, lambda, one)[0];
    const RealPoint qp = phi_r_map(r, lambda, wp, 1e-7);
    for (double x : q_leaf_residuals(r, lambda, qp))
        out.phi_res = std::max(out.phi_res, std::abs(x));

    const RealPoint proj = pi_projection(r, p);
    const auto [p1, p2] = F_eval(1, proj);
    out.pi_res = std::max(std::abs(p1), std::abs(p2));
    return out;
}

GeometryReport run_certification(int r, int a, const SampleConfig& cfg, bool parallel) {
    GeometryReport rep;
    rep.r = r;
    rep.a = a;
    rep.seed = cfg.seed;
    rep.count = cfg.count;
    rep.tol_eq = cfg.tol_eq;
    rep.tol_grad = cfg.tol_grad;
    rep.defining_poly_ok = defining_poly_invariant(r, a);
    rep.min_abs_pairing = 1e300;

    double worst_residual = 0, worst_grad = 0, min_pairing = 1e300, worst_gap = 0;
    double worst_mu = 0, worst_phi = 0, worst_pi = 0;
    int min_rank = 2, samples = 0;

#ifdef OC_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel)                                     \
    reduction(max : worst_residual, worst_grad, worst_gap, worst_mu, worst_phi, worst_pi)  \
    reduction(min : min_pairing, min_rank) reduction(+ : samples)
#endif
    for (int i = 0; i < cfg.count; ++i) {
        const PointChecks c = check_index(r, a, cfg, static_cast<uint64_t>(i));
        worst_residual = std::max(worst_residual, c.residual);
        worst_grad = std::max(worst_grad, c.grad_rel);
        min_pairing = std::min(min_pairing, c.abs_pairing);
        worst_gap = std::max(worst_gap, c.pairing_gap);
        min_rank = std::min(min_rank, c.rank);
        worst_mu = std::max(worst_mu, c.mu_inv);
        worst_phi = std::max(worst_phi, c.phi_res);
        worst_pi = std::max(worst_pi, c.pi_res);
        ++samples;
    }
    (void)parallel;

    rep.worst_residual = worst_residual;
    rep.worst_grad_rel_err = worst_grad;
    rep.min_abs_pairing = min_pairing;
    rep.worst_pairing_gap = worst_gap;
    rep.min_rank = min_rank;
    rep.worst_mu_invariance = worst_mu;
    rep.worst_phi_residual = worst_phi;
    rep.worst_pi_residual = worst_pi;
    rep.samples = samples;
    return rep;
}

} // namespace

GeometryReport certify_geometry(int r, int a, const SampleConfig& cfg) {
    return run_certification(r, a, cfg, true);
}

GeometryReport certify_geometry_serial(int r, int a, const SampleConfig& cfg) {
    return run_certification(r, a, cfg, false);
}

} // namespace oc
