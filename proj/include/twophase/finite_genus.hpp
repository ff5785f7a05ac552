#pragma once

#include <array>
#include <vector>

#include "twophase/quadrature.hpp"
#include "twophase/spectral_core.hpp"

namespace twophase {

using Vec2 = std::array<cplx, 2>;

// a_j: clockwise loops around a1_cut = [E2, E3] and a2_cut = [E_{-3}, E_{-2}]
// on the sheet where w = R. b_j: the sheet-+ leg follows b_path (from the
// a-cut endpoint E_{+-2} to the middle-cut endpoint E_{+-1}) and returns on
// the other sheet, so its period is twice the open-path integral.
struct HomologyPaths {
    SegmentContour a1_cut, a2_cut;
    std::vector<cplx> b1_path, b2_path;
};

HomologyPaths default_homology(const SpectralConfig& cfg);
// Same cycles with b paths bent through an interior vertex (homotopic).
HomologyPaths bent_homology(const SpectralConfig& cfg, double bend);

cplx curve_w(cplx z, const SpectralConfig& cfg);

// Periods of z^l dz / w, l = 0..4, over a_j and b_j.
struct MonomialPeriods {
    std::array<std::array<cplx, 5>, 2> a{};
    std::array<std::array<cplx, 5>, 2> b{};
};

MonomialPeriods monomial_periods(const SpectralConfig& cfg, const HomologyPaths& paths, double tol = 1e-12);

// Coefficients C with omega_k = sum_l C(k, l) z^l dz / w normalized so that
// the a_j period of omega_k is 2 pi i delta_jk.
Matrix2 normalized_holomorphic(const MonomialPeriods& per);
Matrix2 period_matrix(const MonomialPeriods& per, const Matrix2& c);

// P(z) dz / w with P = sum_k coef[k] z^k.
struct AbelianDifferentials {
    std::array<cplx, 5> d_omega1{};  // monic cubic, no residue at infinity
    std::array<cplx, 5> d_omega2{};  // 4 z^4 + ..., no residue at infinity
    std::array<cplx, 5> d_omega3{};  // z^2 + ..., residue 1 at infinity on sheet +
};

// Coefficients u_k with 1/w = z^{-3} sum_k u_k z^{-k} at infinity on sheet +.
std::vector<cplx> inverse_w_series(const SpectralConfig& cfg, int terms);

AbelianDifferentials abelian_differentials(const SpectralConfig& cfg, const MonomialPeriods& per);

struct RegularizedConstants {
    cplx e_const, n_const, omega0;
};

// Regularized abelian integrals from E_{-1} to infinity along the downward
// ray through z0 = E_{-1} - i * reach, with the Laurent tail beyond z0
// integrated exactly.
RegularizedConstants regularized_constants(const SpectralConfig& cfg, const AbelianDifferentials& ad,
                                           double reach = 8.0);

struct ThetaSolutionData {
    Matrix2 period_matrix;
    Vec2 v_vec{}, w_vec{}, r_vec{}, d_vec{};
    double e_const = 0, n_const = 0;
    double omega0 = 0;
    double amplitude = 0;
    cplx phase_c{1.0, 0.0};

    // diagnostics
    double normalization_residual = 0;  // max |a-period of omega_k - 2 pi i delta|
    double differential_a_residual = 0; // max |a-period of dOmega_j|
    double symmetry_error = 0;          // |B12 - B21|
    double conjugation_error = 0;       // V, W, r, D constraint violations
    double reality_error = 0;           // |Im E|, |Im N|, |Im omega0|
    std::array<double, 2> re_b_eigenvalues{};
    AbelianDifferentials differentials;
    Matrix2 holomorphic;
};

struct BVectors {
    Vec2 v, w, r;
};
// V_j, W_j = b_j periods of dOmega1, dOmega2; r_j = -b_j period of dOmega3.
BVectors b_vectors(const MonomialPeriods& per, const AbelianDifferentials& ad);

ThetaSolutionData theta_solution_data(const SpectralConfig& cfg);
ThetaSolutionData theta_solution_data(const SpectralConfig& cfg, const HomologyPaths& paths);

// Theta function as mantissa * exp(log_scale), so that large Re z does not
// overflow. value() recombines.
struct ScaledTheta {
    cplx mantissa{};
    double log_scale = 0.0;
    cplx value() const { return mantissa * std::exp(log_scale); }
};

// Smallest truncation N such that the lattice tail beyond |n|_inf = N is
// bounded by tol: sum_{k>N} 8k exp(lambda_max k^2 / 2 + sqrt(2) |Re z| k),
// lambda_max the largest eigenvalue of Re B (negative).
int theta_truncation(const Matrix2& b, double re_z_norm, double tol = 1e-12);
double theta_tail_bound(const Matrix2& b, double re_z_norm, int trunc);

// sum over |n1|, |n2| <= trunc of exp(<n, B n>/2 + <n, z>), rows n1 outer.
ScaledTheta theta_sum_scaled(const Vec2& z, const Matrix2& b, int trunc);
cplx theta_sum(const Vec2& z, const Matrix2& b, int trunc);

// Thrown when |Theta| at the denominator is below 1e-10.
struct ThetaZeroError : DomainError {
    using DomainError::DomainError;
};

// A c Theta(iVx + iWt - D + r) / Theta(iVx + iWt - D) e^{-iEx + iNt}
// trunc = 0 picks the truncation per point from the tail bound; a fixed
// trunc is still checked against it.
cplx q_theta(double x, double t, const SpectralConfig& cfg, const ThetaSolutionData& data, int trunc = 0);

}  // namespace twophase
