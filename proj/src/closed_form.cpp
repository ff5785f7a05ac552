#include "twophase/closed_form.hpp"

#include <cmath>
#include <string>

namespace twophase {

LimitSolitonParams soliton_params(const SpectralConfig& cfg) {
    cplx e1 = cfg.e1, e3 = cfg.e3, m1 = cfg.em1(), m3 = cfg.em3();
    double re = e1.real(), im = e1.imag();
    LimitSolitonParams p;
    p.A = im;
    p.E = 2.0 * re;
    p.N = -2.0 * (2.0 * re * re - im * im);
    double gap = std::abs(e3 - e1) - std::abs(e3 - m1);
    p.B = gap * gap / (std::abs(e3 - m3) * std::abs(e1 - m1));

    cplx s1 = std::sqrt(kI * (m3 - e1));
    cplx s2 = std::sqrt(kI * (m3 - m1));
    cplx xe = 2.0 * kI * s1 * s2;
    cplx tp = 4.0 * kI * (m3 + re) * s1 * s2;
    cplx rs = -2.0 * std::log((s2 - s1) / (s2 + s1));
    p.xi = xe.real();
    p.eta = xe.imag();
    p.theta_c = tp.real();
    p.phi = tp.imag();
    p.rho = rs.real();
    p.sigma = rs.imag();
    p.alpha = cfg.alpha;
    p.b_below_one = p.B < 1.0;
    return p;
}

double soliton_denominator(double x, double t, const LimitSolitonParams& p) {
    return std::cosh(p.eta * x + p.phi * t) + p.B * std::cos(p.xi * x + p.theta_c * t - p.alpha);
}

cplx q_soliton(double x, double t, const LimitSolitonParams& p) {
    double den = soliton_denominator(x, t, p);
    if (!(std::abs(den) > 1e-300))
        throw DomainError("q_soliton: vanishing denominator at (x, t) = (" + std::to_string(x) + ", " +
                          std::to_string(t) + ")");
    cplx num = std::cosh(cplx(p.eta * x + p.phi * t, -p.sigma)) +
               p.B * std::cos(cplx(p.xi * x + p.theta_c * t - p.alpha, -p.rho));
    return p.c1 * p.A * num / den * std::exp(kI * (-p.E * x + p.N * t));
}

cplx q_planewave(double x, double t, const SpectralConfig& cfg) {
    double re = cfg.e1.real(), im = cfg.e1.imag();
    double e = 2.0 * re, n = -2.0 * (2.0 * re * re - im * im);
    return -im * std::exp(kI * (-e * x + n * t));
}

cplx q_peregrine(double x, double t, cplx e1) {
    double re = e1.real(), im = e1.imag();
    if (!(im > 0.0)) throw DomainError("q_peregrine: Im(E1) must be positive");
    double s = x + 4.0 * re * t;
    double den = 4.0 * im * im * s * s + 16.0 * im * im * im * im * t * t + 1.0;
    cplx rational = 1.0 - (16.0 * kI * im * im * t + 4.0) / den;
    return im * rational * std::exp(kI * (-2.0 * re * x - 2.0 * (2.0 * re * re - im * im) * t));
}

cplx q_peregrine_standard(double x, double t) {
    return (1.0 - (16.0 * kI * t + 4.0) / (4.0 * x * x + 16.0 * t * t + 1.0)) * std::exp(2.0 * kI * t);
}

}  // namespace twophase
