#include "twophase/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace twophase {

const NodeSet& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<NodeSet>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto ns = std::make_unique<NodeSet>();
    ns->x.resize(n);
    ns->w.resize(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        ns->x[i] = -z;
        ns->x[n - 1 - i] = z;
        ns->w[i] = ns->w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    const NodeSet& ref = *ns;
    cache.emplace(n, std::move(ns));
    return ref;
}

cplx gauss_chebyshev(const std::function<cplx(double)>& g, int n) {
    if (n < 4) throw DomainError("gauss_chebyshev: need at least 4 nodes");
    cplx acc = 0.0;
    for (int k = 1; k <= n; ++k) {
        double t = 0.5 * (1.0 + std::cos((2.0 * k - 1.0) * kPi / (2.0 * n)));
        acc += g(t);
    }
    return acc * (kPi / n);
}

cplx singular_cut_integral(const std::function<cplx(double)>& g, const QuadratureRule& rule) {
    if (rule.kind != QuadratureRule::Kind::chebyshev_singular)
        throw DomainError("singular_cut_integral: rule must be chebyshev_singular");
    int n = rule.n_nodes;
    cplx prev = gauss_chebyshev(g, n);
    while (2 * n <= rule.max_nodes) {
        n *= 2;
        cplx cur = gauss_chebyshev(g, n);
        if (std::abs(cur - prev) <= rule.tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw ConvergenceError("singular_cut_integral: node doubling did not converge");
}

namespace {

cplx legendre_polyline(const std::function<cplx(cplx)>& f, const std::vector<cplx>& poly, int n) {
    const NodeSet& gl = gauss_legendre(n);
    cplx acc = 0.0;
    for (size_t leg = 0; leg + 1 < poly.size(); ++leg) {
        cplx a = poly[leg], b = poly[leg + 1];
        cplx half = 0.5 * (b - a), mid = 0.5 * (a + b);
        cplx s = 0.0;
        for (int i = 0; i < n; ++i) s += gl.w[i] * f(mid + half * gl.x[i]);
        acc += s * half;
    }
    return acc;
}

}  // namespace

cplx path_integral(const std::function<cplx(cplx)>& f, const std::vector<cplx>& polyline,
                   const QuadratureRule& rule) {
    if (polyline.size() < 2) throw DomainError("path_integral: polyline needs two vertices");
    int n = rule.n_nodes;
    cplx prev = legendre_polyline(f, polyline, n);
    while (2 * n <= rule.max_nodes) {
        n *= 2;
        cplx cur = legendre_polyline(f, polyline, n);
        if (std::abs(cur - prev) <= rule.tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw ConvergenceError("path_integral: node doubling did not converge");
}

std::vector<cplx> CutMeasure::moments(int kmax) const {
    std::vector<cplx> m(kmax + 1, 0.0);
    for (size_t i = 0; i < nodes.size(); ++i) {
        cplx p = weights[i];
        for (int k = 0; k <= kmax; ++k) {
            m[k] += p;
            p *= nodes[i];
        }
    }
    return m;
}

cplx CutMeasure::cauchy(cplx z, int moment) const {
    const cplx rel = z - origin;
    const bool exact = offsets.size() == nodes.size();
    cplx acc = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        cplx zeta = nodes[i];
        cplx num = weights[i];
        for (int k = 0; k < moment; ++k) num *= zeta;
        acc += num / (exact ? offsets[i] - rel : zeta - z);
    }
    return acc;
}

namespace {

// Breakpoints in u on [0, 1/2] for one half of the segment.
std::vector<double> half_breakpoints(const MeasureOptions& opt, double focus_u, double focus_h) {
    std::vector<double> br{0.0, 0.5};
    double x = 0.5;
    for (int k = 0; k < opt.grading_levels; ++k) {
        x *= opt.grading_ratio;
        br.push_back(x);
    }
    if (focus_u >= 0.0) {
        br.push_back(focus_u);
        for (double h = focus_h; h < 0.5; h *= 2.0) {
            if (focus_u - h > 0.0) br.push_back(focus_u - h);
            if (focus_u + h < 0.5) br.push_back(focus_u + h);
        }
    }
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    for (int s = 0; s < opt.splits; ++s) {
        std::vector<double> fine;
        for (size_t i = 0; i + 1 < br.size(); ++i) {
            fine.push_back(br[i]);
            fine.push_back(0.5 * (br[i] + br[i + 1]));
        }
        fine.push_back(br.back());
        br.swap(fine);
    }
    return br;
}

}  // namespace

CutMeasure build_cut_measure(const SegmentContour& seg, const SpectralConfig& cfg, int side,
                             const MeasureOptions& opt) {
    const cplx p = seg.a, q = seg.b, len = q - p;
    if (len == cplx(0.0)) throw DomainError("build_cut_measure: degenerate segment");
    const NodeSet& gl = gauss_legendre(opt.panel_order);
    CutMeasure out;
    out.origin = p;

    for (int half = 0; half < 2; ++half) {
        double focus_u = -1.0, focus_h = 0.0;
        if (opt.has_focus) {
            // closest point of this half, in t and then in u
            double proj = ((opt.focus - p) * std::conj(len)).real() / std::norm(len);
            double tstar = half == 0 ? std::clamp(proj, 0.0, 0.5) : std::clamp(proj, 0.5, 1.0);
            double dist = std::abs(opt.focus - (p + tstar * len));
            if (dist < 0.05 * std::abs(len)) {
                double tau = half == 0 ? tstar : 1.0 - tstar;
                focus_u = 2.0 / kPi * std::asin(std::sqrt(tau));
                double jac = kPi * std::sin(kPi * focus_u / 2) * std::cos(kPi * focus_u / 2) * std::abs(len);
                focus_h = jac > 0.0 ? std::min(0.25, std::max(dist, 1e-15) / jac) : 0.25;
            }
        }
        std::vector<double> br = half_breakpoints(opt, focus_u, focus_h);
        for (size_t k = 0; k + 1 < br.size(); ++k) {
            double a = br[k], b = br[k + 1];
            double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
            for (size_t i = 0; i < gl.x.size(); ++i) {
                double u = mid + hw * gl.x[i];
                double sn = std::sin(kPi * u / 2), cs = std::cos(kPi * u / 2);
                double s2 = sn * sn, c2 = cs * cs;
                SegmentPoint pt{p, q, half == 0 ? s2 : c2, half == 0 ? c2 : s2, side};
                cplx r = radial_r(pt, cfg);
                out.nodes.push_back(pt.z());
                out.offsets.push_back(half == 0 ? s2 * len : len - s2 * len);
                out.weights.push_back(hw * gl.w[i] * kPi * sn * cs * len / r);
            }
        }
    }
    return out;
}

CutMeasure converged_cut_measure(const SegmentContour& seg, const SpectralConfig& cfg, int side, double tol,
                                 MeasureOptions opt) {
    CutMeasure coarse = build_cut_measure(seg, cfg, side, opt);
    std::vector<cplx> mc = coarse.moments(4);
    for (int attempt = 0; attempt < 3; ++attempt) {
        opt.splits += 1;
        CutMeasure fine = build_cut_measure(seg, cfg, side, opt);
        std::vector<cplx> mf = fine.moments(4);
        double scale = 1.0, diff = 0.0;
        for (int k = 0; k <= 4; ++k) {
            scale = std::max(scale, std::abs(mf[k]));
            diff = std::max(diff, std::abs(mf[k] - mc[k]));
        }
        if (diff <= tol * scale) return fine;
        coarse = std::move(fine);
        mc = std::move(mf);
    }
    throw ConvergenceError("cut quadrature did not converge under panel bisection");
}

cplx cauchy_cut_integral(cplx z, const SegmentContour& seg, const SpectralConfig& cfg, int moment, int side,
                         double tol) {
    double len = std::abs(seg.b - seg.a);
    double dist = distance_to_segment(z, seg.a, seg.b);
    if (dist == 0.0) throw DomainError("cauchy_cut_integral: z lies on the contour");
    MeasureOptions opt;
    if (dist < 0.05 * len) {
        opt.has_focus = true;
        opt.focus = z;
        // refinement check on the Cauchy value itself, since it is what depends on the focus.
        // Close to the arc the sum cancels heavily; the attainable accuracy is
        // roundoff on sum |terms|, not on the result.
        CutMeasure coarse = build_cut_measure(seg, cfg, side, opt);
        cplx prev = coarse.cauchy(z, moment);
        for (int attempt = 0; attempt < 3; ++attempt) {
            opt.splits += 1;
            CutMeasure fine = build_cut_measure(seg, cfg, side, opt);
            cplx cur = fine.cauchy(z, moment);
            double mass = 0.0;
            for (size_t i = 0; i < fine.nodes.size(); ++i)
                mass += std::abs(fine.weights[i] * std::pow(fine.nodes[i], moment) / (fine.nodes[i] - z));
            if (std::abs(cur - prev) <= std::max(tol * std::max(1.0, std::abs(cur)), 1e-14 * mass)) return cur;
            prev = cur;
        }
        throw ConvergenceError("cauchy_cut_integral: near-contour refinement did not converge");
    }
    return converged_cut_measure(seg, cfg, side, tol).cauchy(z, moment);
}

}  // namespace twophase
