#include "twophase/normalization.hpp"

#include <cmath>

#include "twophase/linalg.hpp"

namespace twophase {

std::array<SegmentContour, 4> d_arcs(const SpectralConfig& cfg) {
    return {SegmentContour{cfg.e2(), cfg.e3}, SegmentContour{cfg.e1, cfg.e2()},
            SegmentContour{cfg.em2(), cfg.em1()}, SegmentContour{cfg.em3(), cfg.em2()}};
}

std::array<int, 4> d_arc_sides() { return {+1, 0, 0, +1}; }

namespace {

std::array<CutMeasure, 4> arc_measures(const SpectralConfig& cfg) {
    auto arcs = d_arcs(cfg);
    auto sides = d_arc_sides();
    std::array<CutMeasure, 4> out;
    for (int s = 0; s < 4; ++s) out[s] = converged_cut_measure(arcs[s], cfg, sides[s]);
    return out;
}

std::pair<Matrix2, Matrix2> matrices_from(const std::array<CutMeasure, 4>& m) {
    auto i23 = m[0].moments(1), i12 = m[1].moments(1), im21 = m[2].moments(1), im32 = m[3].moments(1);
    Matrix2 a{i23[0], im32[0], i23[1], im32[1]};
    Matrix2 b{i12[0], im21[0], i12[1], im21[1]};
    return {a, b};
}

std::pair<cplx, cplx> solve_system(const Matrix2& a, const Matrix2& b, double beta) {
    if (std::abs(a.det()) < 1e-14) throw SingularError("moment matrix A is singular (degenerate configuration)");
    cplx r1 = beta * (b.m11 + b.m12), r2 = beta * (b.m21 + b.m22);
    Matrix2 ai = a.inverse();
    return {ai.m11 * r1 + ai.m12 * r2, ai.m21 * r1 + ai.m22 * r2};
}

}  // namespace

std::pair<Matrix2, Matrix2> moment_matrices(const SpectralConfig& cfg) {
    auto mats = matrices_from(arc_measures(cfg));
    if (std::abs(mats.first.det()) < 1e-14)
        throw SingularError("moment matrix A is singular (degenerate configuration)");
    return mats;
}

cplx h_constant(const SpectralConfig& cfg) {
    cplx e1 = cfg.e1, e3 = cfg.e3, m1 = cfg.em1();
    if (e1 == e3) throw DomainError("h_constant: E1 = E3");
    double gap = std::abs(e1 - e3) - std::abs(e3 - m1);
    return (e3 - e1) * (e3 - m1) * gap * gap / (2.0 * e1.imag() * e1.imag() * e3.imag());
}

cplx alpha_hat_asymptotic(const SpectralConfig& cfg) {
    return kI * cfg.beta / kPi * std::log(cfg.epsilon / (4.0 * kI * h_constant(cfg)));
}

NormalizationData normalize(const SpectralConfig& cfg) {
    NormalizationData n;
    n.epsilon = cfg.epsilon;
    n.h_constant = h_constant(cfg);
    n.arcs = arc_measures(cfg);
    std::tie(n.a_tilde, n.b_tilde) = matrices_from(n.arcs);
    std::tie(n.alpha_hat, n.alpha_hat_star) = solve_system(n.a_tilde, n.b_tilde, cfg.beta);
    double conj_err = std::abs(n.alpha_hat_star - std::conj(n.alpha_hat));
    if (conj_err > 1e-8)
        throw InvariantError("alpha_hat system: second unknown is not conj(alpha_hat) (error " +
                             std::to_string(conj_err) + ")");
    n.coeffs = {n.alpha_hat, -cfg.beta, -cfg.beta, std::conj(n.alpha_hat)};
    for (int s = 0; s < 4; ++s) {
        auto mom = n.arcs[s].moments(2);
        for (int k = 0; k < 3; ++k) n.cancellation[k] += n.coeffs[s] * mom[k];
    }
    cplx dinf = -n.cancellation[2] / (2.0 * kPi * kI);
    n.d_infinity = dinf.real();
    n.d_infinity_imag = dinf.imag();
    if (std::abs(dinf.imag()) > 1e-8)
        throw InvariantError("d_infinity is not real (imaginary part " + std::to_string(dinf.imag()) + ")");
    return n;
}

cplx solve_alpha_hat(const SpectralConfig& cfg) { return normalize(cfg).alpha_hat; }

double d_infinity(const SpectralConfig& cfg) { return normalize(cfg).d_infinity; }

cplx d_function(cplx z, const SpectralConfig& cfg, const NormalizationData& norm) {
    auto arcs = d_arcs(cfg);
    auto sides = d_arc_sides();
    // With the two cancellation identities in force,
    //   sum c_s int dzeta/((zeta-z)R) = z^{-2} sum c_s int zeta^2 dzeta/((zeta-z)R),
    // and the right side avoids the catastrophic cancellation at large |z|.
    int moment = std::abs(z) >= 1.0 ? 2 : 0;
    cplx acc = 0.0;
    for (int s = 0; s < 4; ++s) {
        double len = std::abs(arcs[s].b - arcs[s].a);
        double dist = distance_to_segment(z, arcs[s].a, arcs[s].b);
        if (dist <= 1e-15 * (len + std::abs(z)))
            throw DomainError("d_function: z lies on one of the arcs of d");
        cplx c = dist < 0.05 * len ? cauchy_cut_integral(z, arcs[s], cfg, moment, sides[s])
                                   : norm.arcs[s].cauchy(z, moment);
        acc += norm.coeffs[s] * c;
    }
    if (moment == 2) acc /= z * z;
    return radial_r(z, cfg) * acc / (2.0 * kPi * kI);
}

cplx d_boundary_value(int arc, double t, int side, const SpectralConfig& cfg, const NormalizationData& norm) {
    auto arcs = d_arcs(cfg);
    const SegmentContour& seg = arcs.at(arc);
    cplx dir = seg.b - seg.a;
    double len = std::abs(dir);
    cplx normal = kI * dir / len;  // points to the left of the arc
    cplx z0 = seg.a + t * dir;
    // d is analytic up to the arc from each side, so d(z0 + h n) is a power
    // series in h. Neville extrapolation to h = 0 through h0 / 2^k.
    constexpr int levels = 4;
    double h0 = 1e-3 * len;
    std::array<double, levels> h{};
    std::array<cplx, levels> tab{};
    for (int k = 0; k < levels; ++k) {
        h[k] = h0 / std::pow(2.0, k);
        tab[k] = d_function(z0 + double(side) * h[k] * normal, cfg, norm);
    }
    for (int m = 1; m < levels; ++m)
        for (int k = levels - 1; k >= m; --k)
            tab[k] = (h[k - m] * tab[k] - h[k] * tab[k - 1]) / (h[k - m] - h[k]);
    return tab[levels - 1];
}

cplx d_at_endpoint(int sign, const SpectralConfig& cfg, const NormalizationData& norm) {
    auto arcs = d_arcs(cfg);
    const SegmentContour& seg = sign > 0 ? arcs[0] : arcs[3];
    cplx end = sign > 0 ? seg.b : seg.a;
    cplx out = sign > 0 ? (seg.b - seg.a) : (seg.a - seg.b);
    out /= std::abs(out);
    // Near the endpoint d = d(E) + a sqrt(h) + b h + O(h^{3/2}).
    const double scale = cfg.epsilon;
    std::array<double, 3> h{1e-4 * scale, 5e-5 * scale, 2.5e-5 * scale};
    std::array<cplx, 3> v{};
    for (int k = 0; k < 3; ++k) v[k] = d_function(end + h[k] * out, cfg, norm);
    RealMatrix m(3, 3);
    for (int k = 0; k < 3; ++k) {
        m(k, 0) = 1.0;
        m(k, 1) = std::sqrt(h[k]);
        m(k, 2) = h[k];
    }
    std::vector<cplx> rhs(v.begin(), v.end());
    return solve_real_system(m, rhs)[0];
}

std::array<double, 4> d_jump_residuals(const SpectralConfig& cfg, const NormalizationData& norm) {
    std::array<double, 4> out{};
    for (int s = 0; s < 4; ++s) {
        cplx plus = d_boundary_value(s, 0.5, +1, cfg, norm);
        cplx minus = d_boundary_value(s, 0.5, -1, cfg, norm);
        switch (s) {
            case 0: out[s] = std::abs(plus + minus - norm.alpha_hat); break;
            case 1:
            case 2: out[s] = std::abs(plus - minus + cfg.beta); break;
            case 3: out[s] = std::abs(plus + minus - std::conj(norm.alpha_hat)); break;
        }
    }
    return out;
}

double d_infinity_limit(const SpectralConfig& cfg) {
    const std::array<double, 3> eps{1e-3, 1e-4, 1e-5};
    RealMatrix m(3, 3);
    std::vector<cplx> rhs(3);
    for (int k = 0; k < 3; ++k) {
        SpectralConfig c = cfg;
        c.epsilon = eps[k];
        rhs[k] = d_infinity(c);
        m(k, 0) = 1.0;
        m(k, 1) = eps[k] * std::log(eps[k]);
        m(k, 2) = eps[k];
    }
    return solve_real_system(m, rhs)[0].real();
}

}  // namespace twophase
