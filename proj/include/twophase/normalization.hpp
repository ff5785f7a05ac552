#pragma once

#include <array>
#include <utility>

#include "twophase/quadrature.hpp"
#include "twophase/spectral_core.hpp"

namespace twophase {

// The four arcs carrying d's Cauchy integrals, in this order:
// (E2 -> E3), (E1 -> E2), (E_{-2} -> E_{-1}), (E_{-3} -> E_{-2}).
// The first and last are cuts of R and use the + (left) boundary value.
std::array<SegmentContour, 4> d_arcs(const SpectralConfig& cfg);
std::array<int, 4> d_arc_sides();

struct NormalizationData {
    cplx alpha_hat{};
    cplx alpha_hat_star{};  // second unknown of the system; equals conj(alpha_hat)
    double d_infinity = 0.0;
    double d_infinity_imag = 0.0;  // residual imaginary part, kept for reports
    cplx h_constant{};
    double epsilon = 0.0;
    Matrix2 a_tilde, b_tilde;
    std::array<CutMeasure, 4> arcs;
    std::array<cplx, 4> coeffs{};  // alpha_hat, -beta, -beta, conj(alpha_hat)
    std::array<cplx, 3> cancellation{};  // sum_s coeffs_s I_k(s), k = 0, 1, 2
};

std::pair<Matrix2, Matrix2> moment_matrices(const SpectralConfig& cfg);
cplx solve_alpha_hat(const SpectralConfig& cfg);
cplx h_constant(const SpectralConfig& cfg);
// (i beta / pi) ln(eps / (4 i H)), the small-eps form of alpha_hat
cplx alpha_hat_asymptotic(const SpectralConfig& cfg);

NormalizationData normalize(const SpectralConfig& cfg);

// d(z; eps) off the four arcs.
cplx d_function(cplx z, const SpectralConfig& cfg, const NormalizationData& norm);
// Boundary value of d at z = arc(t) from the given side (+1 left of the arc),
// by Richardson extrapolation along the normal.
cplx d_boundary_value(int arc, double t, int side, const SpectralConfig& cfg, const NormalizationData& norm);
// d at E3 (sign = +1) or E_{-3} (sign = -1), as a limit along the outward
// continuation of the arc, Richardson over offsets {1, 1/2, 1/4} * 1e-4 * eps.
cplx d_at_endpoint(int sign, const SpectralConfig& cfg, const NormalizationData& norm);

// |d_+ + d_- - alpha_hat|, |d_+ - d_- + beta|, |d_+ - d_- + beta|, |d_+ + d_- - conj(alpha_hat)|
// at the midpoint of each arc.
std::array<double, 4> d_jump_residuals(const SpectralConfig& cfg, const NormalizationData& norm);

double d_infinity(const SpectralConfig& cfg);

// lim_{eps -> 0} d_inf by fitting L + a eps ln eps + b eps through
// eps = 1e-3, 1e-4, 1e-5 (all other parameters of cfg kept).
double d_infinity_limit(const SpectralConfig& cfg);

}  // namespace twophase
