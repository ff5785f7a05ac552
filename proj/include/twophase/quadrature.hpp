#pragma once

#include <functional>
#include <vector>

#include "twophase/spectral_core.hpp"

namespace twophase {

struct QuadratureRule {
    enum class Kind { chebyshev_singular, legendre_smooth };
    int n_nodes = 64;
    Kind kind = Kind::chebyshev_singular;
    double tol = 1e-12;
    int max_nodes = 1024;
};

struct NodeSet {
    std::vector<double> x, w;
};

// Gauss-Legendre nodes and weights on [-1, 1]. Cached; safe to call concurrently.
const NodeSet& gauss_legendre(int n);

// Fixed n-point Gauss-Chebyshev approximation of  int_0^1 g(t) dt / sqrt(t(1-t)).
cplx gauss_chebyshev(const std::function<cplx(double)>& g, int n);

// Same integral with node doubling from rule.n_nodes until two successive
// values agree to rule.tol (relative to max(1, |I|)). Throws ConvergenceError
// once rule.max_nodes is exceeded.
cplx singular_cut_integral(const std::function<cplx(double)>& g, const QuadratureRule& rule = {});

// Gauss-Legendre over each leg of a polyline, doubled until stable.
cplx path_integral(const std::function<cplx(cplx)>& f, const std::vector<cplx>& polyline,
                   const QuadratureRule& rule = {QuadratureRule{16, QuadratureRule::Kind::legendre_smooth}});

// Discrete measure for  int_seg f(zeta) dzeta / R(zeta)  on an oriented
// segment, with R taken on the given side when seg is a cut of R.
// Nodes come from the substitution t = sin^2(pi u / 2) on each half of the
// segment and composite Gauss-Legendre panels graded geometrically toward the
// endpoints, so inverse square-root endpoint behaviour and nearby branch
// points are both resolved.
struct CutMeasure {
    std::vector<cplx> nodes;
    std::vector<cplx> weights;
    // nodes - origin formed without cancellation; the Cauchy kernel uses
    // these so that z a distance 1e-6 from a short arc keeps full accuracy
    cplx origin{};
    std::vector<cplx> offsets;

    template <class F>
    cplx integrate(F&& f) const {
        cplx acc = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
    // int zeta^k dzeta / R for k = 0..kmax
    std::vector<cplx> moments(int kmax) const;
    // Cauchy integral  int zeta^k dzeta / ((zeta - z) R)
    cplx cauchy(cplx z, int moment = 0) const;
};

struct MeasureOptions {
    int panel_order = 16;
    int grading_levels = 40;
    double grading_ratio = 0.2;
    int splits = 0;  // each panel bisected this many times
    // Optional focus: extra panels around the projection of a nearby point.
    bool has_focus = false;
    cplx focus{};
};

CutMeasure build_cut_measure(const SegmentContour& seg, const SpectralConfig& cfg, int side,
                             const MeasureOptions& opt = {});

// Builds the measure and its once-bisected refinement, compares moments 0..4,
// and keeps bisecting until they agree to tol. Returns the finer measure.
CutMeasure converged_cut_measure(const SegmentContour& seg, const SpectralConfig& cfg, int side,
                                 double tol = 1e-12, MeasureOptions opt = {});

// Cauchy integral of 1/R (times zeta^moment) over seg at z. Switches to a
// measure refined around the projection of z when dist(z, seg) < 0.05 |seg|.
cplx cauchy_cut_integral(cplx z, const SegmentContour& seg, const SpectralConfig& cfg, int moment, int side,
                         double tol = 1e-12);

}  // namespace twophase
