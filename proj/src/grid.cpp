#include "twophase/grid.hpp"

#include <cmath>
#include <exception>
#include <limits>

#include <omp.h>

namespace twophase {

void GridSpec::validate() const {
    if (!(x0 < x1)) throw ConfigError("invalid grid: x0 < x1 required");
    if (!(t0 < t1)) throw ConfigError("invalid grid: t0 < t1 required");
    if (nx < 2 || nt < 2) throw ConfigError("invalid grid: nx >= 2 and nt >= 2 required");
}

namespace {

const cplx kNan{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};

// Evaluates one point; returns false and stores the exception if it must propagate.
bool eval_point(const FieldSampler& f, double x, double t, PointErrors mode, cplx& out, std::exception_ptr& err) {
    try {
        out = f(x, t);
    } catch (const DomainError&) {
        if (mode != PointErrors::nan_on_domain) {
            err = std::current_exception();
            return false;
        }
        out = kNan;
    } catch (...) {
        err = std::current_exception();
        return false;
    }
    return true;
}

}  // namespace

std::vector<cplx> evaluate_grid_serial(const FieldSampler& f, const GridSpec& g, PointErrors mode) {
    g.validate();
    std::vector<cplx> out(g.size());
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) {
            std::exception_ptr err;
            if (!eval_point(f, g.x(i), g.t(j), mode, out[size_t(j) * g.nx + i], err)) std::rethrow_exception(err);
        }
    return out;
}

std::vector<cplx> evaluate_grid(const FieldSampler& f, const GridSpec& g, PointErrors mode) {
    g.validate();
    const long n = long(g.size());
    std::vector<cplx> out(n);
    std::vector<std::exception_ptr> errs(n);
    bool failed = false;

#pragma omp parallel for schedule(dynamic, 16) reduction(|| : failed)
    for (long k = 0; k < n; ++k) {
        int i = int(k % g.nx), j = int(k / g.nx);
        if (!eval_point(f, g.x(i), g.t(j), mode, out[k], errs[k])) failed = true;
    }

    if (failed)
        for (const auto& e : errs)
            if (e) std::rethrow_exception(e);
    return out;
}

int grid_threads() { return omp_get_max_threads(); }

}  // namespace twophase
