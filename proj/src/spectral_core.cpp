#include "twophase/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace twophase {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_off_cut(cplx z, cplx a, cplx b, const char* what) {
    double scale = std::abs(b - a) + std::abs(a) + 1.0;
    if (distance_to_segment(z, a, b) <= 1e-15 * scale)
        throw DomainError(std::string(what) + ": point lies on a branch cut; use a one-sided variant");
}

}  // namespace

void SpectralConfig::validate() const {
    if (!finite(e1) || !finite(e3) || !std::isfinite(epsilon) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw ConfigError("all spectral parameters must be finite numbers");
    if (!(e1.imag() > 0.0)) throw ConfigError("invariant violated: Im(E1) > 0");
    if (!(e3.imag() > 0.0)) throw ConfigError("invariant violated: Im(E3) > 0");
    if (!(e1.real() > e3.real())) throw ConfigError("invariant violated: Re(E1) > Re(E3)");
    if (!(epsilon > 0.0)) throw ConfigError("invariant violated: epsilon > 0");
    if (!(e3.real() + epsilon < e1.real()))
        throw ConfigError("invariant violated: Re(E3) + epsilon < Re(E1)");
    if (beta < -kPi || beta > kPi) throw ConfigError("range error: beta must lie in [-pi, pi]");
}

Matrix2 Matrix2::phase(cplx a) {
    return {std::exp(kI * a), 0.0, 0.0, std::exp(-kI * a)};
}

Matrix2 Matrix2::inverse() const {
    cplx d = det();
    if (d == cplx(0.0)) throw SingularError("Matrix2::inverse: zero determinant");
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
}

double Matrix2::max_abs() const {
    return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

Matrix2& Matrix2::operator+=(const Matrix2& o) {
    m11 += o.m11; m12 += o.m12; m21 += o.m21; m22 += o.m22;
    return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
    m11 -= o.m11; m12 -= o.m12; m21 -= o.m21; m22 -= o.m22;
    return *this;
}

Matrix2& Matrix2::operator*=(cplx s) {
    m11 *= s; m12 *= s; m21 *= s; m22 *= s;
    return *this;
}

Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
Matrix2 operator*(cplx s, Matrix2 a) { return a *= s; }
Matrix2 operator*(Matrix2 a, cplx s) { return a *= s; }
Matrix2 operator/(Matrix2 a, cplx s) { return a *= 1.0 / s; }

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

cplx SegmentPoint::diff(cplx e) const {
    if (e == p) return t * (q - p);
    if (e == q) return -omt * (q - p);
    return z() - e;
}

SegmentPoint on_segment(const SegmentContour& seg, double t, int side) {
    return {seg.a, seg.b, t, 1.0 - t, side};
}

cplx principal_sqrt(cplx z) {
    if (!finite(z)) throw DomainError("principal_sqrt: non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw DomainError("principal_sqrt: argument on the branch cut (-inf, 0]");
    return std::sqrt(z);
}

cplx theta_phase(cplx z, double x, double t) { return 2.0 * t * z * z + x * z; }

cplx sqrt_ratio(const SegmentPoint& pt, cplx a, cplx b) {
    bool own = (a == pt.p && b == pt.q) || (a == pt.q && b == pt.p);
    if (!own) return std::sqrt(pt.diff(a) / pt.diff(b));
    if (pt.side == 0) throw DomainError("sqrt_ratio: point on its own cut needs a side");
    // On the segment (z-a)/(z-b) is negative real. Approaching from the left of
    // a -> b it has a small negative imaginary part, so the root is -i sqrt(lambda).
    double lam = (a == pt.p) ? pt.t / pt.omt : pt.omt / pt.t;
    cplx left = (a == pt.p ? -kI : kI) * std::sqrt(lam);
    return pt.side > 0 ? left : -left;
}

cplx radial_r(const SegmentPoint& pt, const SpectralConfig& cfg) {
    cplx e1 = cfg.e1, e2 = cfg.e2(), e3 = cfg.e3;
    cplx m1 = cfg.em1(), m2 = cfg.em2(), m3 = cfg.em3();
    return pt.diff(e2) * pt.diff(m1) * pt.diff(m3) * sqrt_ratio(pt, e3, e2) * sqrt_ratio(pt, e1, m1) *
           sqrt_ratio(pt, m2, m3);
}

cplx radial_r(cplx z, const SpectralConfig& cfg) {
    if (!finite(z)) throw DomainError("radial_r: non-finite argument");
    require_off_cut(z, cfg.e2(), cfg.e3, "radial_r");
    require_off_cut(z, cfg.em1(), cfg.e1, "radial_r");
    require_off_cut(z, cfg.em3(), cfg.em2(), "radial_r");
    cplx e1 = cfg.e1, e2 = cfg.e2(), e3 = cfg.e3;
    cplx m1 = cfg.em1(), m2 = cfg.em2(), m3 = cfg.em3();
    return (z - e2) * (z - m1) * (z - m3) * std::sqrt((z - e3) / (z - e2)) * std::sqrt((z - e1) / (z - m1)) *
           std::sqrt((z - m2) / (z - m3));
}

cplx radial_r_plus(const SegmentContour& seg, double t, const SpectralConfig& cfg) {
    return radial_r(on_segment(seg, t, +1), cfg);
}

cplx radial_r_minus(const SegmentContour& seg, double t, const SpectralConfig& cfg) {
    return radial_r(on_segment(seg, t, -1), cfg);
}

cplx curve_polynomial(cplx z, const SpectralConfig& cfg) {
    return (z - cfg.e1) * (z - cfg.e2()) * (z - cfg.e3) * (z - cfg.em1()) * (z - cfg.em2()) * (z - cfg.em3());
}

cplx r_zero(const SegmentPoint& pt, const SpectralConfig& cfg) {
    return pt.diff(cfg.em1()) * sqrt_ratio(pt, cfg.e1, cfg.em1());
}

cplx r_zero(cplx z, const SpectralConfig& cfg) {
    require_off_cut(z, cfg.em1(), cfg.e1, "r_zero");
    return (z - cfg.em1()) * std::sqrt((z - cfg.e1) / (z - cfg.em1()));
}

cplx mu_factor(const SegmentPoint& pt, const SpectralConfig& cfg, int which) {
    switch (which) {
        case 0: return std::sqrt(sqrt_ratio(pt, cfg.e1, cfg.em1()));
        case 1: return std::sqrt(sqrt_ratio(pt, cfg.e3, cfg.e2()));
        case -1: return 1.0 / std::sqrt(sqrt_ratio(pt, cfg.em3(), cfg.em2()));
        default: throw DomainError("mu_factor: which must be 0, +1 or -1");
    }
}

cplx mu_factor(cplx z, const SpectralConfig& cfg, int which) {
    switch (which) {
        case 0:
            require_off_cut(z, cfg.em1(), cfg.e1, "mu_factor");
            return std::sqrt(std::sqrt((z - cfg.e1) / (z - cfg.em1())));
        case 1:
            require_off_cut(z, cfg.e2(), cfg.e3, "mu_factor");
            return std::sqrt(std::sqrt((z - cfg.e3) / (z - cfg.e2())));
        case -1:
            require_off_cut(z, cfg.em3(), cfg.em2(), "mu_factor");
            return 1.0 / std::sqrt(std::sqrt((z - cfg.em3()) / (z - cfg.em2())));
        default: throw DomainError("mu_factor: which must be 0, +1 or -1");
    }
}

Matrix2 cayley_matrix(cplx mu) {
    if (mu == cplx(0.0)) throw DomainError("cayley_matrix: mu = 0");
    cplx inv = 1.0 / mu;
    cplx c = 0.5 * (mu + inv), s = 0.5 * (mu - inv);
    return {c, kI * s, s / kI, c};
}

SegmentContour cut_lower(const SpectralConfig& cfg) { return {cfg.em3(), cfg.em2()}; }
SegmentContour cut_middle(const SpectralConfig& cfg) { return {cfg.em1(), cfg.e1}; }
SegmentContour cut_upper(const SpectralConfig& cfg) { return {cfg.e2(), cfg.e3}; }

double distance_to_segment(cplx z, cplx a, cplx b) {
    cplx d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - a);
    double s = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + s * d));
}

bool on_closed_segment(cplx z, cplx a, cplx b, double tol) { return distance_to_segment(z, a, b) <= tol; }

}  // namespace twophase
