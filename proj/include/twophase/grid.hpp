#pragma once

#include <functional>
#include <vector>

#include "twophase/spectral_core.hpp"

namespace twophase {

struct GridSpec {
    double x0 = -4.0, x1 = 4.0;
    int nx = 81;
    double t0 = -2.0, t1 = 2.0;
    int nt = 41;

    void validate() const;
    double x(int i) const { return x0 + (x1 - x0) * i / (nx - 1); }
    double t(int j) const { return t0 + (t1 - t0) * j / (nt - 1); }
    size_t size() const { return size_t(nx) * size_t(nt); }
};

using FieldSampler = std::function<cplx(double, double)>;

// What a grid kernel does when a point throws.
enum class PointErrors {
    propagate,  // rethrow the error of the lowest flat index
    nan_on_domain,  // DomainError -> NaN (near-pole points), anything else propagates
};

// Values at (x(i), t(j)) stored at j * nx + i (t outer). The serial and
// parallel kernels return identical bits; each point is independent.
std::vector<cplx> evaluate_grid_serial(const FieldSampler& f, const GridSpec& g,
                                       PointErrors mode = PointErrors::propagate);
std::vector<cplx> evaluate_grid(const FieldSampler& f, const GridSpec& g, PointErrors mode = PointErrors::propagate);

int grid_threads();

}  // namespace twophase
