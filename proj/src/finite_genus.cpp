#include "twophase/finite_genus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace twophase {

HomologyPaths default_homology(const SpectralConfig& cfg) {
    return {SegmentContour{cfg.e2(), cfg.e3}, SegmentContour{cfg.em3(), cfg.em2()}, {cfg.e2(), cfg.e1},
            {cfg.em2(), cfg.em1()}};
}

HomologyPaths bent_homology(const SpectralConfig& cfg, double bend) {
    HomologyPaths h = default_homology(cfg);
    // interior vertex pushed away from the real axis; the region swept
    // between the two paths contains no branch point
    cplx mid = cfg.e2() + (cfg.e1 - cfg.e2()) * cplx(0.5, bend);
    if (mid.imag() < 0.5 * (cfg.e1.imag() + cfg.e2().imag())) mid = cfg.e2() + (cfg.e1 - cfg.e2()) * cplx(0.5, -bend);
    h.b1_path = {cfg.e2(), mid, cfg.e1};
    h.b2_path = {cfg.em2(), std::conj(mid), cfg.em1()};
    return h;
}

cplx curve_w(cplx z, const SpectralConfig& cfg) { return radial_r(z, cfg); }

namespace {

std::array<cplx, 5> monomials_over(const CutMeasure& m) {
    auto v = m.moments(4);
    return {v[0], v[1], v[2], v[3], v[4]};
}

std::array<cplx, 5> path_monomials(const std::vector<cplx>& path, const SpectralConfig& cfg, double tol) {
    std::array<cplx, 5> acc{};
    for (size_t k = 0; k + 1 < path.size(); ++k) {
        auto leg = monomials_over(converged_cut_measure({path[k], path[k + 1]}, cfg, 0, tol));
        for (int l = 0; l < 5; ++l) acc[l] += leg[l];
    }
    return acc;
}

cplx contract(const std::array<cplx, 5>& coef, const std::array<cplx, 5>& periods) {
    cplx s = 0.0;
    for (int l = 0; l < 5; ++l) s += coef[l] * periods[l];
    return s;
}

}  // namespace

MonomialPeriods monomial_periods(const SpectralConfig& cfg, const HomologyPaths& paths, double tol) {
    MonomialPeriods per;
    const SegmentContour cuts[2] = {paths.a1_cut, paths.a2_cut};
    const std::vector<cplx>* bp[2] = {&paths.b1_path, &paths.b2_path};
    for (int j = 0; j < 2; ++j) {
        // clockwise loop around the cut = 2 * (integral along the cut on its left side)
        auto a = monomials_over(converged_cut_measure(cuts[j], cfg, +1, tol));
        auto b = path_monomials(*bp[j], cfg, tol);
        for (int l = 0; l < 5; ++l) {
            per.a[j][l] = 2.0 * a[l];
            per.b[j][l] = 2.0 * b[l];
        }
    }
    return per;
}

Matrix2 normalized_holomorphic(const MonomialPeriods& per) {
    Matrix2 at{per.a[0][0], per.a[1][0], per.a[0][1], per.a[1][1]};  // transpose of a-periods
    if (std::abs(at.det()) < 1e-300) throw SingularError("holomorphic normalization matrix is singular");
    return 2.0 * kPi * kI * at.inverse();
}

Matrix2 period_matrix(const MonomialPeriods& per, const Matrix2& c) {
    auto entry = [&](int j, int k) {
        cplx ck0 = k == 0 ? c.m11 : c.m21, ck1 = k == 0 ? c.m12 : c.m22;
        return ck0 * per.b[j][0] + ck1 * per.b[j][1];
    };
    Matrix2 b{entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
    if (std::abs(b.m12 - b.m21) > 1e-6)
        throw InvariantError("period matrix is not symmetric; b-cycle sheet bookkeeping is wrong");
    return b;
}

std::vector<cplx> inverse_w_series(const SpectralConfig& cfg, int terms) {
    const cplx roots[6] = {cfg.e1, cfg.e2(), cfg.e3, cfg.em1(), cfg.em2(), cfg.em3()};
    std::vector<cplx> u(terms, 0.0);
    u[0] = 1.0;
    for (cplx e : roots) {
        // (1 - e s)^{-1/2} = sum_k binom coefficients (k - 1/2)/k e^k s^k
        std::vector<cplx> b(terms);
        b[0] = 1.0;
        for (int k = 1; k < terms; ++k) b[k] = b[k - 1] * ((k - 0.5) / k) * e;
        std::vector<cplx> next(terms, 0.0);
        for (int i = 0; i < terms; ++i)
            for (int j = 0; i + j < terms; ++j) next[i + j] += u[i] * b[j];
        u.swap(next);
    }
    return u;
}

AbelianDifferentials abelian_differentials(const SpectralConfig& cfg, const MonomialPeriods& per) {
    std::vector<cplx> u = inverse_w_series(cfg, 4);
    Matrix2 a{per.a[0][0], per.a[0][1], per.a[1][0], per.a[1][1]};
    if (std::abs(a.det()) < 1e-300) throw SingularError("a-period matrix is singular");
    Matrix2 ai = a.inverse();
    // fill c0, c1 so both a-periods vanish, given the prescribed leading part
    auto fix = [&](std::array<cplx, 5> coef) {
        cplx r0 = 0.0, r1 = 0.0;
        for (int p = 2; p < 5; ++p) {
            r0 -= coef[p] * per.a[0][p];
            r1 -= coef[p] * per.a[1][p];
        }
        coef[0] = ai.m11 * r0 + ai.m12 * r1;
        coef[1] = ai.m21 * r0 + ai.m22 * r1;
        return coef;
    };
    AbelianDifferentials ad;
    // residue-free at infinity: coefficient of 1/z in P/w vanishes
    ad.d_omega1 = fix({0.0, 0.0, -u[1], 1.0, 0.0});
    cplx c3 = -4.0 * u[1];
    cplx c2 = -c3 * u[1] - 4.0 * u[2];
    ad.d_omega2 = fix({0.0, 0.0, c2, c3, 4.0});
    ad.d_omega3 = fix({0.0, 0.0, 1.0, 0.0, 0.0});
    return ad;
}

namespace {

// Laurent coefficients (power -> coefficient) of P(z)/w(z) at infinity.
std::map<int, cplx> laurent(const std::array<cplx, 5>& p, const std::vector<cplx>& u) {
    std::map<int, cplx> out;
    for (int m = 0; m < 5; ++m) {
        if (p[m] == cplx(0.0)) continue;
        for (size_t k = 0; k < u.size(); ++k) out[m - 3 - int(k)] += p[m] * u[k];
    }
    return out;
}

// int_{E_{-1}}^{z0} P/w along a straight line, zeta = E_{-1} + (z0 - E_{-1}) s^2.
cplx ray_integral(const std::array<cplx, 5>& p, const SpectralConfig& cfg, cplx z0, int panels) {
    const NodeSet& gl = gauss_legendre(20);
    const cplx start = cfg.em1(), span = z0 - start;
    cplx acc = 0.0;
    for (int k = 0; k < panels; ++k) {
        double a = double(k) / panels, b = double(k + 1) / panels;
        double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
        for (size_t i = 0; i < gl.x.size(); ++i) {
            double s = mid + hw * gl.x[i];
            SegmentPoint pt{start, z0, s * s, 1.0 - s * s, 0};
            cplx z = pt.z();
            cplx poly = p[0] + z * (p[1] + z * (p[2] + z * (p[3] + z * p[4])));
            acc += hw * gl.w[i] * poly / radial_r(pt, cfg) * span * (2.0 * s);
        }
    }
    return acc;
}

cplx regularized(const std::array<cplx, 5>& p, const SpectralConfig& cfg, const std::vector<cplx>& u, double reach) {
    cplx z0 = cfg.em1() - kI * reach;
    int panels = std::max(4, int(std::ceil(reach / 2.0)));
    cplx coarse = ray_integral(p, cfg, z0, panels);
    cplx fine = ray_integral(p, cfg, z0, 2 * panels);
    if (std::abs(fine - coarse) > 1e-12 * std::max(1.0, std::abs(fine)))
        throw ConvergenceError("regularized abelian integral: ray quadrature did not converge");
    cplx val = fine;
    for (const auto& [pw, cf] : laurent(p, u)) {
        if (pw == -1)
            val -= cf * std::log(z0);
        else
            val -= cf * std::pow(z0, pw + 1) / double(pw + 1);
    }
    return val;
}

}  // namespace

RegularizedConstants regularized_constants(const SpectralConfig& cfg, const AbelianDifferentials& ad, double reach) {
    std::vector<cplx> u = inverse_w_series(cfg, 90);
    cplx r1 = regularized(ad.d_omega1, cfg, u, reach);
    cplx r2 = regularized(ad.d_omega2, cfg, u, reach);
    cplx r3 = regularized(ad.d_omega3, cfg, u, reach);
    return {-2.0 * r1, 2.0 * r2, std::exp(-2.0 * r3)};
}

BVectors b_vectors(const MonomialPeriods& per, const AbelianDifferentials& ad) {
    BVectors out;
    for (int j = 0; j < 2; ++j) {
        out.v[j] = contract(ad.d_omega1, per.b[j]);
        out.w[j] = contract(ad.d_omega2, per.b[j]);
        out.r[j] = -contract(ad.d_omega3, per.b[j]);
    }
    return out;
}

namespace {

std::array<double, 2> real_part_eigenvalues(const Matrix2& b) {
    double a = b.m11.real(), d = b.m22.real(), c = 0.5 * (b.m12.real() + b.m21.real());
    double mean = 0.5 * (a + d), rad = std::sqrt(0.25 * (a - d) * (a - d) + c * c);
    return {mean + rad, mean - rad};
}

}  // namespace

ThetaSolutionData theta_solution_data(const SpectralConfig& cfg) {
    return theta_solution_data(cfg, default_homology(cfg));
}

ThetaSolutionData theta_solution_data(const SpectralConfig& cfg, const HomologyPaths& paths) {
    ThetaSolutionData d;
    MonomialPeriods per = monomial_periods(cfg, paths);
    d.holomorphic = normalized_holomorphic(per);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            cplx ck0 = k == 0 ? d.holomorphic.m11 : d.holomorphic.m21;
            cplx ck1 = k == 0 ? d.holomorphic.m12 : d.holomorphic.m22;
            cplx val = ck0 * per.a[j][0] + ck1 * per.a[j][1];
            d.normalization_residual = std::max(d.normalization_residual, std::abs(val - (j == k ? 2.0 * kPi * kI : 0.0)));
        }
    d.period_matrix = period_matrix(per, d.holomorphic);
    d.symmetry_error = std::abs(d.period_matrix.m12 - d.period_matrix.m21);
    d.re_b_eigenvalues = real_part_eigenvalues(d.period_matrix);
    if (!(d.re_b_eigenvalues[0] < 0.0)) throw InvariantError("Re B is not negative definite");

    d.differentials = abelian_differentials(cfg, per);
    for (const auto* p : {&d.differentials.d_omega1, &d.differentials.d_omega2, &d.differentials.d_omega3})
        for (int j = 0; j < 2; ++j)
            d.differential_a_residual =
                std::max(d.differential_a_residual, std::abs(contract(*p, per.a[j])) / std::max(1.0, std::abs(per.a[j][4])));

    RegularizedConstants rc = regularized_constants(cfg, d.differentials);
    d.reality_error = std::max({std::abs(rc.e_const.imag()), std::abs(rc.n_const.imag()), std::abs(rc.omega0.imag())});
    if (std::abs(rc.e_const.imag()) > 1e-8 || std::abs(rc.n_const.imag()) > 1e-8)
        throw InvariantError("E or N is not real");
    d.e_const = rc.e_const.real();
    d.n_const = rc.n_const.real();
    d.omega0 = rc.omega0.real();
    d.amplitude = 2.0 * std::sqrt(std::abs(d.omega0));

    BVectors bv = b_vectors(per, d.differentials);
    d.v_vec = bv.v;
    d.w_vec = bv.w;
    d.r_vec = bv.r;
    const Matrix2& b = d.period_matrix;
    double f = cfg.beta / (2.0 * kPi);
    d.d_vec = {kI * cfg.alpha + f * (b.m11 - b.m12), kI * cfg.alpha + f * (b.m21 - b.m22)};
    d.conjugation_error = std::max({std::abs(d.v_vec[1] - std::conj(d.v_vec[0])),
                                    std::abs(d.w_vec[1] - std::conj(d.w_vec[0])),
                                    std::abs(d.r_vec[1] - std::conj(d.r_vec[0])),
                                    std::abs(d.d_vec[1] + std::conj(d.d_vec[0]))});
    if (d.conjugation_error > 1e-8)
        throw InvariantError("V, W, r, D violate the conjugation constraints (error " +
                             std::to_string(d.conjugation_error) + ")");
    return d;
}

double theta_tail_bound(const Matrix2& b, double re_z_norm, int trunc) {
    double lam = real_part_eigenvalues(b)[0];
    if (!(lam < 0.0)) throw DomainError("theta: Re B must be negative definite");
    double sum = 0.0;
    for (int k = trunc + 1; k < trunc + 400; ++k) {
        double term = 8.0 * k * std::exp(0.5 * lam * k * k + std::sqrt(2.0) * re_z_norm * k);
        sum += term;
        if (k > trunc + 2 && term < 1e-18 * sum) break;
    }
    return sum;
}

int theta_truncation(const Matrix2& b, double re_z_norm, double tol) {
    for (int n = 1; n <= 200; ++n)
        if (theta_tail_bound(b, re_z_norm, n) <= tol) return n;
    throw ConvergenceError("theta truncation: tail bound does not fall below tolerance");
}

ScaledTheta theta_sum_scaled(const Vec2& z, const Matrix2& b, int trunc) {
    double rz = std::hypot(z[0].real(), z[1].real());
    if (theta_tail_bound(b, rz, trunc) > 1e-12)
        throw ConvergenceError("theta_sum: truncation " + std::to_string(trunc) + " is insufficient");
    const int side = 2 * trunc + 1;
    std::vector<cplx> ex(size_t(side) * side);
    double top = -INFINITY;
    size_t idx = 0;
    for (int n1 = -trunc; n1 <= trunc; ++n1)
        for (int n2 = -trunc; n2 <= trunc; ++n2) {
            cplx e = 0.5 * (double(n1 * n1) * b.m11 + double(n1 * n2) * (b.m12 + b.m21) + double(n2 * n2) * b.m22) +
                     double(n1) * z[0] + double(n2) * z[1];
            ex[idx++] = e;
            top = std::max(top, e.real());
        }
    cplx acc = 0.0;
    for (cplx e : ex) acc += std::exp(e - top);
    return {acc, top};
}

cplx theta_sum(const Vec2& z, const Matrix2& b, int trunc) { return theta_sum_scaled(z, b, trunc).value(); }

cplx q_theta(double x, double t, const SpectralConfig& cfg, const ThetaSolutionData& data, int trunc) {
    (void)cfg;
    Vec2 z, zr;
    for (int j = 0; j < 2; ++j) {
        z[j] = kI * data.v_vec[j] * x + kI * data.w_vec[j] * t - data.d_vec[j];
        zr[j] = z[j] + data.r_vec[j];
    }
    double rz = std::max(std::hypot(z[0].real(), z[1].real()), std::hypot(zr[0].real(), zr[1].real()));
    if (trunc < 0) throw DomainError("q_theta: truncation must be nonnegative");
    if (trunc == 0) trunc = theta_truncation(data.period_matrix, rz);
    ScaledTheta num = theta_sum_scaled(zr, data.period_matrix, trunc);
    ScaledTheta den = theta_sum_scaled(z, data.period_matrix, trunc);
    if (std::log(std::abs(den.mantissa)) + den.log_scale < std::log(1e-10))
        throw ThetaZeroError("q_theta: theta denominator vanishes near (x, t) = (" + std::to_string(x) + ", " +
                             std::to_string(t) + ")");
    cplx ratio = num.mantissa / den.mantissa * std::exp(num.log_scale - den.log_scale);
    return data.amplitude * data.phase_c * ratio * std::exp(kI * (-data.e_const * x + data.n_const * t));
}

}  // namespace twophase
