#include "twophase/parametrix.hpp"

#include <algorithm>
#include <cmath>

#include "twophase/residual_rhp.hpp"

namespace twophase {

RegionConfig make_regions(const SpectralConfig& cfg) {
    double lim = std::min({std::abs(cfg.e3 - cfg.e1), distance_to_segment(cfg.e3, cfg.em1(), cfg.e1),
                           cfg.e3.imag()});
    RegionConfig reg{cfg.e3 + 0.5 * cfg.epsilon, std::conj(cfg.e3 + 0.5 * cfg.epsilon), 0.2 * lim};
    check_regions(reg, cfg);
    return reg;
}

void check_regions(const RegionConfig& reg, const SpectralConfig& cfg) {
    double lim = std::min({std::abs(cfg.e3 - cfg.e1), distance_to_segment(cfg.e3, cfg.em1(), cfg.e1),
                           cfg.e3.imag()});
    if (!(reg.radius > 0.5 * cfg.epsilon))
        throw DomainError("disk radius must exceed eps/2 so the disk contains [E2, E3]");
    if (!(reg.radius < 0.25 * lim)) throw DomainError("disk radius violates the separation rule");
}

int boundary_sign(cplx z, const RegionConfig& reg) {
    double tol = 1e-9 * reg.radius;
    if (std::abs(std::abs(z - reg.center_plus) - reg.radius) <= tol) return +1;
    if (std::abs(std::abs(z - reg.center_minus) - reg.radius) <= tol) return -1;
    throw DomainError("point is not on a disk boundary");
}

cplx d_zero(cplx z, double x, double t, const SpectralConfig& cfg) {
    return theta_phase(z, x, t) - (2.0 * t * (z + cfg.e1.real()) + x) * r_zero(z, cfg);
}

cplx d_zero(const SegmentPoint& pt, double x, double t, const SpectralConfig& cfg) {
    cplx z = pt.z();
    return theta_phase(z, x, t) - (2.0 * t * (z + cfg.e1.real()) + x) * r_zero(pt, cfg);
}

double d_zero_infinity(double x, double t, const SpectralConfig& cfg) {
    double re = cfg.e1.real(), im = cfg.e1.imag();
    // ((E1+E_{-1})^2/2 + (E1-E_{-1})^2/4) t + (E1+E_{-1})/2 x
    return (2.0 * re * re - im * im) * t + re * x;
}

Matrix2 psi_zero(cplx z, double x, double t, const SpectralConfig& cfg) {
    return Matrix2::phase(-d_zero_infinity(x, t, cfg)) * cayley_matrix(mu_factor(z, cfg, 0)) *
           Matrix2::phase(d_zero(z, x, t, cfg));
}

Matrix2 psi_zero(const SegmentPoint& pt, double x, double t, const SpectralConfig& cfg) {
    SegmentContour mid = cut_middle(cfg);
    bool on_mid = (pt.p == mid.a && pt.q == mid.b) || (pt.p == mid.b && pt.q == mid.a);
    if (!on_mid || pt.side == 0) throw DomainError("psi_zero: boundary value needs a sided point of [E_{-1}, E1]");
    return Matrix2::phase(-d_zero_infinity(x, t, cfg)) * cayley_matrix(mu_factor(pt, cfg, 0)) *
           Matrix2::phase(d_zero(pt, x, t, cfg));
}

Matrix2 psi_zero_jump(cplx z, double x, double t) {
    cplx th = theta_phase(z, x, t);
    return Matrix2::phase(-th) * (-kI * Matrix2::sigma2()) * Matrix2::phase(th);
}

Matrix2 psi_local(cplx z, double x, double t, const SpectralConfig& cfg, const NormalizationData& norm, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("psi_local: sign must be +1 or -1");
    cplx ah = sign > 0 ? norm.alpha_hat : std::conj(norm.alpha_hat);
    cplx ph = theta_phase(z, x, t) + 0.5 * (cfg.alpha - ah);
    return Matrix2::phase(-ph) * cayley_matrix(mu_factor(z, cfg, sign)) * Matrix2::phase(ph);
}

Matrix2 phi_tilde(cplx z, double x, double t, const SpectralConfig& cfg, const NormalizationData& norm,
                  const RegionConfig& reg) {
    double tol = 1e-12 * reg.radius;
    double dp = std::abs(z - reg.center_plus) - reg.radius;
    double dm = std::abs(z - reg.center_minus) - reg.radius;
    if (std::abs(dp) <= tol || std::abs(dm) <= tol)
        throw DomainError("phi_tilde: point on a disk boundary; choose a side");
    Matrix2 p0 = psi_zero(z, x, t, cfg);
    if (dp < 0.0) return p0 * psi_local(z, x, t, cfg, norm, +1);
    if (dm < 0.0) return p0 * psi_local(z, x, t, cfg, norm, -1);
    return p0;
}

Matrix2 jump_m_q(cplx z, double x, double t, const SpectralConfig& cfg, const NormalizationData& norm,
                 const RegionConfig& reg) {
    int sign = boundary_sign(z, reg);
    Matrix2 p0 = psi_zero(z, x, t, cfg);
    return p0 * psi_local(z, x, t, cfg, norm, sign).inverse() * p0.inverse();
}

Matrix2 jump_m_q_limit(cplx z, double x, double t, const SpectralConfig& cfg, const RegionConfig& reg) {
    int sign = boundary_sign(z, reg);
    cplx pole = sign > 0 ? cfg.e3 : cfg.em3();
    return Matrix2::identity() + g_matrix(z, x, t, cfg, sign) / (z - pole);
}

}  // namespace twophase
