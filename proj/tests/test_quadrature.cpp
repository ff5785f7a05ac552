#include <doctest.h>

#include <cmath>

#include "twophase/quadrature.hpp"

using namespace twophase;

TEST_CASE("Gauss-Chebyshev moments of the singular weight") {
    const double expect[3] = {kPi, kPi / 2.0, 3.0 * kPi / 8.0};
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(gauss_chebyshev([k](double t) { return cplx(std::pow(t, k)); }, 64) - expect[k]) <= 1e-14);
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const NodeSet& gl = gauss_legendre(16);
    double s0 = 0, s30 = 0;
    for (size_t i = 0; i < gl.x.size(); ++i) {
        s0 += gl.w[i];
        s30 += gl.w[i] * std::pow(gl.x[i], 30);
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s30 == doctest::Approx(2.0 / 31.0).epsilon(1e-14));
}

TEST_CASE("adaptive singular integral doubles until stable") {
    // int_0^1 e^t / sqrt(t(1-t)) dt = pi e^{1/2} I0(1/2)
    cplx v = singular_cut_integral([](double t) { return cplx(std::exp(t)); });
    CHECK(std::abs(v - kPi * std::exp(0.5) * std::cyl_bessel_i(0.0, 0.5)) < 1e-13);
    QuadratureRule tight{8, QuadratureRule::Kind::chebyshev_singular, 1e-15, 16};
    CHECK_THROWS_AS(singular_cut_integral([](double t) { return cplx(std::exp(40 * t)); }, tight), ConvergenceError);
}

TEST_CASE("polyline integral of an entire function is path independent") {
    auto f = [](cplx z) { return std::exp(z) * z; };
    cplx a{0, 0}, b{1, 2};
    cplx straight = path_integral(f, {a, b});
    cplx bent = path_integral(f, {a, cplx(2, -1), b});
    cplx exact = std::exp(b) * (b - 1.0) - std::exp(a) * (a - 1.0);
    CHECK(std::abs(straight - exact) < 1e-13);
    CHECK(std::abs(bent - exact) < 1e-12);
}

TEST_CASE("cut measure: Cauchy integral converges near the arc") {
    SpectralConfig c{cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi};
    SegmentContour seg{c.e2(), c.e3};
    cplx far = cauchy_cut_integral(cplx(0.0, 0.0), seg, c, 0, +1);
    CutMeasure m = converged_cut_measure(seg, c, +1);
    CHECK(std::abs(far - m.cauchy(cplx(0.0, 0.0))) < 1e-12 * std::abs(far));
    // one 1e-3 |seg| off the short cut: finite, and stable when the step halves
    cplx mid = 0.5 * (seg.a + seg.b), nrm = kI * (seg.b - seg.a);
    cplx v1 = cauchy_cut_integral(mid + 1e-3 * nrm, seg, c, 0, +1);
    cplx v2 = cauchy_cut_integral(mid + 5e-4 * nrm, seg, c, 0, +1);
    CHECK(std::isfinite(v1.real()));
    CHECK(std::abs(v1 - v2) < 1e-2 * std::abs(v1));
    CHECK_THROWS_AS(cauchy_cut_integral(mid, seg, c, 0, +1), DomainError);
}

TEST_CASE("cut measure moments are side-odd") {
    SpectralConfig c{cplx(1, 1), cplx(-1, 1.5), 1e-2, 0.3, kPi};
    SegmentContour seg{c.em1(), c.e1};
    auto plus = converged_cut_measure(seg, c, +1).moments(3);
    auto minus = converged_cut_measure(seg, c, -1).moments(3);
    for (int k = 0; k <= 3; ++k) CHECK(std::abs(plus[k] + minus[k]) < 1e-12 * std::abs(plus[k]));
}
