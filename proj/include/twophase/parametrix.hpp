#pragma once

#include "twophase/normalization.hpp"
#include "twophase/spectral_core.hpp"

namespace twophase {

// Disks D_{+1} (around the shrinking cut [E2, E3]) and D_{-1} (its mirror).
struct RegionConfig {
    cplx center_plus;
    cplx center_minus;
    double radius = 0.0;
};

// Centers E3 + eps/2 and conjugate; radius 0.2 * min(|E3 - E1|,
// dist(E3, [E_{-1}, E1]), Im E3). Throws DomainError if the disk would not
// contain the cut.
RegionConfig make_regions(const SpectralConfig& cfg);
void check_regions(const RegionConfig& reg, const SpectralConfig& cfg);

// +1 or -1 for z on the boundary circle of D_{+1} or D_{-1} (relative
// tolerance 1e-9 on the radius); throws DomainError otherwise.
int boundary_sign(cplx z, const RegionConfig& reg);

cplx d_zero(cplx z, double x, double t, const SpectralConfig& cfg);
cplx d_zero(const SegmentPoint& pt, double x, double t, const SpectralConfig& cfg);
double d_zero_infinity(double x, double t, const SpectralConfig& cfg);

Matrix2 psi_zero(cplx z, double x, double t, const SpectralConfig& cfg);
// Boundary value on the middle cut; pt must lie on [E_{-1}, E1] with a side.
Matrix2 psi_zero(const SegmentPoint& pt, double x, double t, const SpectralConfig& cfg);
// e^{-i theta sigma3} (-i sigma2) e^{i theta sigma3}
Matrix2 psi_zero_jump(cplx z, double x, double t);

Matrix2 psi_local(cplx z, double x, double t, const SpectralConfig& cfg, const NormalizationData& norm, int sign);

// psi0 outside both disks, psi0 psi_{+1} in D_{+1}, psi0 psi_{-1} in D_{-1}.
Matrix2 phi_tilde(cplx z, double x, double t, const SpectralConfig& cfg, const NormalizationData& norm,
                  const RegionConfig& reg);

// psi0 psi_{+-1}^{-1} psi0^{-1} on the disk boundaries
Matrix2 jump_m_q(cplx z, double x, double t, const SpectralConfig& cfg, const NormalizationData& norm,
                 const RegionConfig& reg);
// The eps = 0, beta = pi limit 1 + G(z)/(z - E_{+-3}).
Matrix2 jump_m_q_limit(cplx z, double x, double t, const SpectralConfig& cfg, const RegionConfig& reg);

}  // namespace twophase
