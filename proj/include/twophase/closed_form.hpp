#pragma once

#include "twophase/spectral_core.hpp"

namespace twophase {

// Parameters of the limiting soliton on the unstable condensate.
// theta_c is the time frequency of the cos argument (not the phase function).
struct LimitSolitonParams {
    double A = 0, E = 0, N = 0, B = 0;
    double xi = 0, eta = 0, theta_c = 0, phi = 0;
    double rho = 0, sigma = 0;
    double alpha = 0;
    cplx c1{1.0, 0.0};
    // B < 1 keeps the denominator away from zero for all real (x, t); it is
    // not guaranteed in general, so it is recorded per configuration.
    bool b_below_one = true;
};

LimitSolitonParams soliton_params(const SpectralConfig& cfg);

// A (cosh(eta x + phi t - i sigma) + B cos(xi x + theta_c t - alpha - i rho))
//   / (cosh(eta x + phi t) + B cos(xi x + theta_c t - alpha)) e^{-iEx + iNt}
cplx q_soliton(double x, double t, const LimitSolitonParams& p);
// Real denominator of q_soliton; bounded below by 1 - B.
double soliton_denominator(double x, double t, const LimitSolitonParams& p);

// -A e^{-iEx + iNt}
cplx q_planewave(double x, double t, const SpectralConfig& cfg);

// Merged-point limit E3 -> E1 with alpha = beta = pi, amplitude Im(E1).
cplx q_peregrine(double x, double t, cplx e1);
cplx q_peregrine_standard(double x, double t);

}  // namespace twophase
