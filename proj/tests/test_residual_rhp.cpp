#include <doctest.h>

#include <cmath>

#include "twophase/closed_form.hpp"
#include "twophase/residual_rhp.hpp"

using namespace twophase;

namespace {
SpectralConfig desk() { return {cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi}; }
}  // namespace

TEST_CASE("G is nilpotent") {
    SpectralConfig c = desk();
    for (int br : {1, -1}) {
        Matrix2 g = g_matrix(cplx(0.3, br * 1.2), 0.5, 0.25, c, br);
        CHECK((g * g).max_abs() < 1e-13 * std::max(1.0, g.max_abs() * g.max_abs()));
        CHECK(std::abs(g.trace()) < 1e-13 * std::max(1.0, g.max_abs()));
    }
}

TEST_CASE("contour derivative of G matches a difference quotient") {
    SpectralConfig c = desk();
    cplx z0 = c.e3;
    Matrix2 d = g_derivative(z0, 0.2, 0.1, c, 1, 0.05);
    double h = 1e-5;
    Matrix2 fd = (g_matrix(z0 + h, 0.2, 0.1, c, 1) - g_matrix(z0 - h, 0.2, 0.1, c, 1)) / cplx(2 * h);
    CHECK((d - fd).max_abs() < 1e-6 * std::max(1.0, d.max_abs()));
}

TEST_CASE("residual system solves at scattered points") {
    SpectralConfig c = desk();
    for (auto [x, t] : {std::pair{0.0, 0.0}, std::pair{1.3, -0.7}, std::pair{-2.5, 1.9}}) {
        ResidualSolution s = solve_residual(x, t, c);
        CHECK(s.residual < 1e-10);
        CHECK(s.first_equation_residual < 1e-10);
        CHECK(laurent_analyticity_check(x, t, c, s) < 1e-8);
    }
}

TEST_CASE("limit matches the closed-form soliton") {
    SpectralConfig c = desk();
    LimitSolitonParams p = soliton_params(c);
    double dlim = 0.964;  // only the phase depends on it; compare moduli
    for (auto [x, t] : {std::pair{0.0, 0.0}, std::pair{0.8, 0.3}}) {
        cplx a = q_limit_rhp(x, t, c, dlim), b = q_soliton(x, t, p);
        CHECK(std::abs(std::abs(a) - std::abs(b)) < 1e-9);
    }
}
