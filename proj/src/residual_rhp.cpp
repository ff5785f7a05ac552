#include "twophase/residual_rhp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twophase/linalg.hpp"

namespace twophase {

Matrix2 g_matrix(cplx z, double x, double t, const SpectralConfig& cfg, int branch) {
    Matrix2 p = psi_zero(z, x, t, cfg);
    Matrix2 pi = p.inverse();
    cplx h = h_constant(cfg);
    cplx ph = 2.0 * theta_phase(z, x, t) + cfg.alpha;
    if (branch > 0) return h * std::exp(-kI * ph) * (p * Matrix2::sigma_plus() * pi);
    if (branch < 0) return -std::conj(h) * std::exp(kI * ph) * (p * Matrix2::sigma_minus() * pi);
    throw DomainError("g_matrix: branch must be +1 or -1");
}

namespace {

Matrix2 trapezoid_derivative(cplx z0, double x, double t, const SpectralConfig& cfg, int branch, double r, int n) {
    Matrix2 acc;
    for (int k = 0; k < n; ++k) {
        cplx e = std::polar(1.0, 2.0 * kPi * k / n);
        acc += g_matrix(z0 + r * e, x, t, cfg, branch) * std::conj(e);
    }
    return acc / (double(n) * r);
}

}  // namespace

Matrix2 g_derivative(cplx z0, double x, double t, const SpectralConfig& cfg, int branch, double radius) {
    int n = 64;
    Matrix2 prev = trapezoid_derivative(z0, x, t, cfg, branch, radius, n);
    for (; n <= 1024; n *= 2) {
        Matrix2 cur = trapezoid_derivative(z0, x, t, cfg, branch, radius, 2 * n);
        if ((cur - prev).max_abs() <= 1e-13 * std::max(1.0, cur.max_abs())) return cur;
        prev = cur;
    }
    throw ConvergenceError("g_derivative: contour derivative did not converge");
}

namespace {

struct SystemPieces {
    Matrix2 g1, gm, g1p, gmp, p1_inv, pm_inv;
    cplx e3, em3;
};

SystemPieces pieces(double x, double t, const SpectralConfig& cfg) {
    RegionConfig reg = make_regions(cfg);
    SystemPieces s;
    s.e3 = cfg.e3;
    s.em3 = cfg.em3();
    s.g1 = g_matrix(s.e3, x, t, cfg, +1);
    s.gm = g_matrix(s.em3, x, t, cfg, -1);
    s.g1p = g_derivative(s.e3, x, t, cfg, +1, 0.5 * reg.radius);
    s.gmp = g_derivative(s.em3, x, t, cfg, -1, 0.5 * reg.radius);
    s.p1_inv = psi_zero(s.e3, x, t, cfg).inverse();
    s.pm_inv = psi_zero(s.em3, x, t, cfg).inverse();
    return s;
}

Matrix2 a1_of(const SystemPieces& s, cplx a, cplx b) { return Matrix2{0.0, a, 0.0, b} * s.p1_inv; }
Matrix2 am1_of(const SystemPieces& s, cplx c, cplx d) { return Matrix2{c, 0.0, d, 0.0} * s.pm_inv; }

// Second equations of the two analyticity systems, stacked as 8 scalars.
// scale, if given, receives per-equation-block sizes of the largest term.
std::array<cplx, 8> equations(const SystemPieces& s, const std::array<cplx, 4>& v, bool with_constant,
                              std::array<double, 2>* scale = nullptr) {
    Matrix2 a1 = a1_of(s, v[0], v[1]), am = am1_of(s, v[2], v[3]);
    Matrix2 t11 = a1 * (Matrix2::identity() + s.g1p), t12 = am * s.g1 / (s.e3 - s.em3);
    Matrix2 t21 = a1 * s.gm / (s.em3 - s.e3), t22 = am * (Matrix2::identity() + s.gmp);
    Matrix2 e1 = t11 + t12, e2 = t21 + t22;
    if (with_constant) {
        e1 += s.g1;
        e2 += s.gm;
    }
    if (scale) {
        (*scale)[0] = std::max({1.0, t11.max_abs(), t12.max_abs(), with_constant ? s.g1.max_abs() : 0.0});
        (*scale)[1] = std::max({1.0, t21.max_abs(), t22.max_abs(), with_constant ? s.gm.max_abs() : 0.0});
    }
    return {e1.m11, e1.m12, e1.m21, e1.m22, e2.m11, e2.m12, e2.m21, e2.m22};
}

void closed_form_coefficients(double x, double t, const SpectralConfig& cfg, const EndpointValues& dv,
                              ResidualSolution& sol) {
    cplx e1 = cfg.e1, e3 = cfg.e3, m1 = cfg.em1();
    double a13 = std::abs(e3 - e1), a1m = std::abs(e3 - m1);
    double im1 = e1.imag(), im3 = e3.imag();
    cplx h = h_constant(cfg);
    cplx th3 = theta_phase(e3, x, t);
    cplx d03 = d_zero(e3, x, t, cfg);
    double d0inf = d_zero_infinity(x, t, cfg);
    cplx q4 = std::sqrt(std::sqrt((e3 - e1) / (e3 - m1)));
    cplx tt = 1.0 + (a13 - a1m) * (a13 - a1m) / (4.0 * im1 * im3) * std::exp(kI * (2.0 * d03 - 2.0 * th3 - cfg.alpha));
    cplx uu = h * (a13 + a1m) / (4.0 * kI * im3 * std::sqrt(a13) * std::sqrt(a1m)) *
              std::exp(kI * (dv.d_e3 - dv.d_em3 - 2.0 * th3 - cfg.alpha));
    // the displayed phases use theta(z); z can only mean E3 here
    cplx vv = -0.5 * h * (q4 + 1.0 / q4) * std::exp(kI * (d03 - d0inf - 2.0 * th3 - cfg.alpha));
    cplx ww = 0.5 * kI * h * (q4 - 1.0 / q4) * std::exp(kI * (d03 + d0inf - 2.0 * th3 - cfg.alpha));
    double den = std::norm(tt) + std::norm(uu);
    sol.tuvw = {tt, uu, vv, ww};
    sol.a_closed = (vv * std::conj(tt) - std::conj(ww) * uu) / den;
    sol.b_closed = (std::conj(vv) * uu + ww * std::conj(tt)) / den;
    sol.closed_form_discrepancy = std::max(std::abs(sol.a_closed - sol.a), std::abs(sol.b_closed - sol.b));
    sol.has_closed_form = true;
}

}  // namespace

ResidualSolution solve_residual(double x, double t, const SpectralConfig& cfg, std::optional<EndpointValues> dvals) {
    SystemPieces s = pieces(x, t, cfg);
    std::array<cplx, 4> zero{};
    std::array<cplx, 8> b0 = equations(s, zero, true);
    ComplexMatrix m(8, 4);
    for (int k = 0; k < 4; ++k) {
        std::array<cplx, 4> unit{};
        unit[k] = 1.0;
        std::array<cplx, 8> col = equations(s, unit, false);
        for (int i = 0; i < 8; ++i) m(i, k) = col[i];
    }
    std::vector<cplx> rhs(8);
    for (int i = 0; i < 8; ++i) rhs[i] = -b0[i];
    LeastSquaresResult ls = least_squares(m, rhs);
    if (ls.condition > 1e12)
        throw SingularError("residual RHP system is ill-conditioned at (x, t) = (" + std::to_string(x) + ", " +
                            std::to_string(t) + ")");

    ResidualSolution sol;
    sol.a = ls.x[0];
    sol.b = ls.x[1];
    sol.c = ls.x[2];
    sol.d = ls.x[3];
    sol.a1_matrix = a1_of(s, sol.a, sol.b);
    sol.a_minus1_matrix = am1_of(s, sol.c, sol.d);
    sol.condition = ls.condition;
    for (int k = 0; k < 4; ++k) sol.singular_values[k] = ls.singular_values[k];
    std::array<double, 2> scale{};
    std::array<cplx, 8> res = equations(s, {sol.a, sol.b, sol.c, sol.d}, true, &scale);
    for (int i = 0; i < 8; ++i) {
        sol.absolute_residual = std::max(sol.absolute_residual, std::abs(res[i]));
        sol.residual = std::max(sol.residual, std::abs(res[i]) / scale[i / 4]);
    }
    sol.first_equation_residual =
        std::max((sol.a1_matrix * s.g1).max_abs() / std::max(1.0, sol.a1_matrix.max_abs() * s.g1.max_abs()),
                 (sol.a_minus1_matrix * s.gm).max_abs() / std::max(1.0, sol.a_minus1_matrix.max_abs() * s.gm.max_abs()));
    if (dvals) closed_form_coefficients(x, t, cfg, *dvals, sol);
    return sol;
}

std::array<double, 2> laurent_coefficients_norm(double x, double t, const SpectralConfig& cfg,
                                                const ResidualSolution& sol) {
    RegionConfig reg = make_regions(cfg);
    const double rho = 0.5 * reg.radius;
    const int n = 64;
    std::array<double, 2> out{};
    for (int branch : {+1, -1}) {
        cplx pole = branch > 0 ? cfg.e3 : cfg.em3();
        Matrix2 c1, c2;
        double size = 1.0;
        for (int k = 0; k < n; ++k) {
            cplx w = rho * std::polar(1.0, 2.0 * kPi * k / n);
            cplx z = pole + w;
            Matrix2 qm = Matrix2::identity() + sol.a1_matrix / (z - cfg.e3) + sol.a_minus1_matrix / (z - cfg.em3());
            Matrix2 g = g_matrix(z, x, t, cfg, branch);
            Matrix2 f = qm * (Matrix2::identity() + g / w);
            size = std::max(size, qm.max_abs() * (1.0 + g.max_abs() / rho));
            c1 += f * w;
            c2 += f * (w * w);
        }
        c1 = c1 / double(n);
        c2 = c2 / double(n);
        out[branch > 0 ? 0 : 1] = std::max(c1.max_abs() / rho, c2.max_abs() / (rho * rho)) / size;
    }
    return out;
}

double laurent_analyticity_check(double x, double t, const SpectralConfig& cfg, const ResidualSolution& sol) {
    auto v = laurent_coefficients_norm(x, t, cfg, sol);
    return std::max(v[0], v[1]);
}

cplx q_limit_rhp(double x, double t, const SpectralConfig& cfg, double d_inf_limit) {
    ResidualSolution sol = solve_residual(x, t, cfg);
    Matrix2 sum = sol.a1_matrix + sol.a_minus1_matrix;
    // lim z [psi0]_12 = e^{-2 i d0_inf} * i (E_{-1} - E1) / 4
    cplx tail = std::exp(-2.0 * kI * d_zero_infinity(x, t, cfg)) * kI * (cfg.em1() - cfg.e1) / 4.0;
    return -2.0 * std::exp(-2.0 * kI * d_inf_limit) * (sum.m12 + tail);
}

}  // namespace twophase
