#pragma once

#include <vector>

#include "twophase/grid.hpp"

namespace twophase {

// Second-order central differences of i q_t + q_xx + 2|q|^2 q.
cplx fnls_residual(const FieldSampler& q, double x, double t, double h);
// (4 R(h/2) - R(h)) / 3: removes the h^2 stencil error.
cplx fnls_residual_richardson(const FieldSampler& q, double x, double t, double h);
// |i q_t| + |q_xx| + 2|q|^3 with the same stencils; the natural size of the terms.
double fnls_term_scale(const FieldSampler& q, double x, double t, double h);

struct ResidualReport {
    double h = 0;
    double max_residual = 0;       // max |R(h)|
    double max_richardson = 0;     // max |(4R(h/2) - R(h))/3|
    double term_scale = 0;         // max of fnls_term_scale
    double relative = 0;           // max_residual / term_scale
    double richardson_relative = 0;
    size_t points = 0;             // finite points used
};

// NaN points (excluded near poles) are skipped.
ResidualReport fnls_residual_grid(const FieldSampler& q, const GridSpec& g, double h = 1e-3);

struct PhaseAlignment {
    double distance = 0;
    cplx phase{1.0, 0.0};
    size_t points = 0;
};

// min over |c| = 1 of max |f - c g| on matching samples. c starts from the
// phase of sum f conj(g) and is refined by a +-0.01 rad sweep. Pairs with a
// NaN on either side are skipped.
PhaseAlignment aligned_distance(const std::vector<cplx>& f, const std::vector<cplx>& g);
PhaseAlignment phase_aligned_distance(const FieldSampler& f, const FieldSampler& g, const GridSpec& grid);

struct ConvergenceReport {
    std::vector<double> eps_values;
    std::vector<double> distances;
    std::vector<cplx> aligned_phases;
    bool monotone = false;  // distances strictly decreasing
};

// For each epsilon builds the theta solution and measures its aligned
// distance to reference. eps_list must be strictly decreasing.
ConvergenceReport convergence_study(const SpectralConfig& base, const std::vector<double>& eps_list,
                                    const FieldSampler& reference, const GridSpec& grid);

}  // namespace twophase
