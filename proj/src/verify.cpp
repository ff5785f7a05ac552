#include "twophase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twophase/finite_genus.hpp"

namespace twophase {

namespace {

struct Stencil {
    cplx q, q_t, q_xx;
};

Stencil stencil(const FieldSampler& q, double x, double t, double h) {
    cplx c = q(x, t);
    cplx xp = q(x + h, t), xm = q(x - h, t);
    cplx tp = q(x, t + h), tm = q(x, t - h);
    return {c, (tp - tm) / (2.0 * h), (xp - 2.0 * c + xm) / (h * h)};
}

cplx combine(const Stencil& s) { return kI * s.q_t + s.q_xx + 2.0 * std::norm(s.q) * s.q; }

}  // namespace

cplx fnls_residual(const FieldSampler& q, double x, double t, double h) { return combine(stencil(q, x, t, h)); }

cplx fnls_residual_richardson(const FieldSampler& q, double x, double t, double h) {
    return (4.0 * fnls_residual(q, x, t, 0.5 * h) - fnls_residual(q, x, t, h)) / 3.0;
}

double fnls_term_scale(const FieldSampler& q, double x, double t, double h) {
    Stencil s = stencil(q, x, t, h);
    double a = std::abs(s.q);
    return std::abs(s.q_t) + std::abs(s.q_xx) + 2.0 * a * a * a;
}

ResidualReport fnls_residual_grid(const FieldSampler& q, const GridSpec& g, double h) {
    if (!(h > 0)) throw DomainError("fnls_residual_grid: h must be positive");
    auto plain = evaluate_grid([&](double x, double t) { return fnls_residual(q, x, t, h); }, g,
                               PointErrors::nan_on_domain);
    auto rich = evaluate_grid([&](double x, double t) { return fnls_residual_richardson(q, x, t, h); }, g,
                              PointErrors::nan_on_domain);
    auto scale = evaluate_grid([&](double x, double t) { return cplx(fnls_term_scale(q, x, t, h)); }, g,
                               PointErrors::nan_on_domain);
    ResidualReport r;
    r.h = h;
    for (size_t k = 0; k < plain.size(); ++k) {
        if (std::isnan(plain[k].real()) || std::isnan(rich[k].real()) || std::isnan(scale[k].real())) continue;
        r.max_residual = std::max(r.max_residual, std::abs(plain[k]));
        r.max_richardson = std::max(r.max_richardson, std::abs(rich[k]));
        r.term_scale = std::max(r.term_scale, scale[k].real());
        ++r.points;
    }
    if (r.points == 0) throw DomainError("fnls_residual_grid: no evaluable grid points");
    r.relative = r.term_scale > 0 ? r.max_residual / r.term_scale : r.max_residual;
    r.richardson_relative = r.term_scale > 0 ? r.max_richardson / r.term_scale : r.max_richardson;
    return r;
}

PhaseAlignment aligned_distance(const std::vector<cplx>& f, const std::vector<cplx>& g) {
    if (f.size() != g.size()) throw DomainError("aligned_distance: sample counts differ");
    std::vector<size_t> keep;
    cplx inner = 0.0;
    double gmax = 0.0;
    for (size_t k = 0; k < f.size(); ++k) {
        if (std::isnan(f[k].real()) || std::isnan(f[k].imag()) || std::isnan(g[k].real()) || std::isnan(g[k].imag()))
            continue;
        keep.push_back(k);
        inner += f[k] * std::conj(g[k]);
        gmax = std::max(gmax, std::abs(g[k]));
    }
    if (keep.empty() || gmax == 0.0) throw DomainError("phase_aligned_distance: zero reference field");

    auto dist = [&](double phi) {
        cplx c = std::polar(1.0, phi);
        double m = 0.0;
        for (size_t k : keep) m = std::max(m, std::abs(f[k] - c * g[k]));
        return m;
    };
    double phi0 = std::abs(inner) > 0 ? std::arg(inner) : 0.0;
    double best_phi = phi0, best = dist(phi0);
    const int steps = 200;
    for (int s = 0; s <= steps; ++s) {
        double phi = phi0 - 0.01 + 0.02 * s / steps;
        double d = dist(phi);
        if (d < best) {
            best = d;
            best_phi = phi;
        }
    }
    return {best, std::polar(1.0, best_phi), keep.size()};
}

PhaseAlignment phase_aligned_distance(const FieldSampler& f, const FieldSampler& g, const GridSpec& grid) {
    return aligned_distance(evaluate_grid(f, grid, PointErrors::nan_on_domain),
                            evaluate_grid(g, grid, PointErrors::nan_on_domain));
}

namespace {

std::string at_eps(const char* what, double eps) {
    std::ostringstream os;
    os << what << " (epsilon = " << eps << ")";
    return os.str();
}

}  // namespace

ConvergenceReport convergence_study(const SpectralConfig& base, const std::vector<double>& eps_list,
                                    const FieldSampler& reference, const GridSpec& grid) {
    if (eps_list.empty()) throw DomainError("convergence_study: empty epsilon list");
    for (size_t k = 0; k < eps_list.size(); ++k) {
        if (!(eps_list[k] > 0)) throw DomainError("convergence_study: epsilon values must be positive");
        if (k > 0 && !(eps_list[k] < eps_list[k - 1]))
            throw DomainError("convergence_study: epsilon list must be strictly decreasing");
    }
    std::vector<cplx> ref = evaluate_grid(reference, grid, PointErrors::nan_on_domain);

    ConvergenceReport rep;
    for (double eps : eps_list) {
        SpectralConfig cfg = base;
        cfg.epsilon = eps;
        PhaseAlignment pa;
        try {
            cfg.validate();
            ThetaSolutionData data = theta_solution_data(cfg);
            auto field = evaluate_grid([&](double x, double t) { return q_theta(x, t, cfg, data); }, grid,
                                       PointErrors::nan_on_domain);
            pa = aligned_distance(field, ref);
        } catch (const ConfigError& e) {
            throw ConfigError(at_eps(e.what(), eps));
        } catch (const DomainError& e) {
            throw DomainError(at_eps(e.what(), eps));
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(at_eps(e.what(), eps));
        } catch (const SingularError& e) {
            throw SingularError(at_eps(e.what(), eps));
        } catch (const InvariantError& e) {
            throw InvariantError(at_eps(e.what(), eps));
        }
        rep.eps_values.push_back(eps);
        rep.distances.push_back(pa.distance);
        rep.aligned_phases.push_back(pa.phase);
    }
    rep.monotone = true;
    for (size_t k = 1; k < rep.distances.size(); ++k)
        if (!(rep.distances[k] < rep.distances[k - 1])) rep.monotone = false;
    return rep;
}

}  // namespace twophase
