#pragma once

#include <array>
#include <optional>

#include "twophase/parametrix.hpp"

namespace twophase {

struct ResidualSolution {
    Matrix2 a1_matrix;
    Matrix2 a_minus1_matrix;
    cplx a{}, b{}, c{}, d{};
    std::array<cplx, 4> tuvw{};  // T, U, V, W of the closed form, when evaluated
    bool has_closed_form = false;
    cplx a_closed{}, b_closed{};
    double closed_form_discrepancy = 0.0;  // max(|a - a_closed|, |b - b_closed|)
    double residual = 0.0;                 // max over the 8 scalar equations, relative (see below)
    double absolute_residual = 0.0;        // same, unscaled
    double first_equation_residual = 0.0;  // |A1 G(E3)|, |A_{-1} G(E_{-3})|, relative
    double condition = 0.0;
    std::array<double, 4> singular_values{};
};

// G(z) = H e^{-i(2 theta + alpha)} psi0 sigma+ psi0^{-1}       (branch +1)
// G(z) = -conj(H) e^{i(2 theta + alpha)} psi0 sigma- psi0^{-1}  (branch -1)
Matrix2 g_matrix(cplx z, double x, double t, const SpectralConfig& cfg, int branch);

// G'(z0) from the trapezoidal Cauchy derivative on |z - z0| = radius, with
// node doubling 64 -> 128 -> ... until stable to 1e-13 (relative).
Matrix2 g_derivative(cplx z0, double x, double t, const SpectralConfig& cfg, int branch, double radius);

// Optional finite-eps values of d(E3), d(E_{-3}) enable the closed-form
// cross-check of a, b through T, U, V, W.
struct EndpointValues {
    cplx d_e3, d_em3;
};

// The equations sum terms as large as |A||G'| (G grows like e^{|Im theta|}),
// so residual is max |equation| / max(1, size of its largest term).
ResidualSolution solve_residual(double x, double t, const SpectralConfig& cfg,
                                std::optional<EndpointValues> dvals = std::nullopt);

// Largest norm among the (z - E_{+-3})^{-1} and ^{-2} Laurent coefficients of
// Q_-(z; 0) M_Q(z; 0) around E3 and E_{-3}, each divided by rho^k times the
// largest |Q| (1 + |G| / rho) on the sampling circle |z - E_{+-3}| = rho.
double laurent_analyticity_check(double x, double t, const SpectralConfig& cfg, const ResidualSolution& sol);
// Per-point values {at E3, at E_{-3}}.
std::array<double, 2> laurent_coefficients_norm(double x, double t, const SpectralConfig& cfg,
                                                const ResidualSolution& sol);

// lim q by the residual RHP. d_inf_limit is lim_{eps->0} d_inf.
cplx q_limit_rhp(double x, double t, const SpectralConfig& cfg, double d_inf_limit);

}  // namespace twophase
