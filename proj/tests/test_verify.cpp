#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "twophase/closed_form.hpp"
#include "twophase/verify.hpp"

using namespace twophase;

TEST_CASE("residual of a non-solution") {
    // q = e^{ix}: q_xx = -q, |q|^2 q = q, so the residual is q itself
    FieldSampler q = [](double x, double) { return std::exp(kI * x); };
    cplx r = fnls_residual_richardson(q, 0.4, 0.0, 1e-3);
    CHECK(std::abs(r - std::exp(kI * 0.4)) < 1e-8);
    CHECK(std::abs(fnls_residual(q, 0.4, 0.0, 1e-3) - std::exp(kI * 0.4)) < 1e-6);
}

TEST_CASE("Richardson removes the stencil error") {
    SpectralConfig c{cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi};
    LimitSolitonParams p = soliton_params(c);
    FieldSampler q = [&](double x, double t) { return q_soliton(x, t, p); };
    GridSpec g{-2, 2, 9, -1, 1, 5};
    ResidualReport rep = fnls_residual_grid(q, g);
    CHECK(rep.points == g.size());
    CHECK(rep.relative > 1e-7);
    CHECK(rep.richardson_relative < 1e-8);
}

TEST_CASE("aligned distance is a phase-invariant pseudo-metric") {
    std::vector<cplx> f{cplx(1, 2), cplx(-0.5, 0.3), cplx(0.0, -1.0)};
    cplx c = std::polar(1.0, 0.7);
    std::vector<cplx> g;
    for (cplx v : f) g.push_back(c * v);
    PhaseAlignment a = aligned_distance(f, g);
    CHECK(a.distance < 1e-14);
    CHECK(std::abs(a.phase - std::conj(c)) < 1e-14);
    CHECK(aligned_distance(f, f).distance == 0.0);

    std::vector<cplx> h{cplx(1, 2.1), cplx(-0.4, 0.3), cplx(0.1, -1.0)};
    double fh = aligned_distance(f, h).distance, hf = aligned_distance(h, f).distance;
    CHECK(std::abs(fh - hf) < 1e-3);
    CHECK(fh <= std::abs(h[0] - f[0]) + std::abs(h[1] - f[1]) + std::abs(h[2] - f[2]));
}

TEST_CASE("NaN samples are skipped and zero fields rejected") {
    double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<cplx> f{cplx(1, 0), cplx(nan, 0), cplx(0, 1)};
    std::vector<cplx> g{cplx(1, 0), cplx(5, 5), cplx(0, 1)};
    PhaseAlignment a = aligned_distance(f, g);
    CHECK(a.points == 2);
    CHECK(a.distance < 1e-15);
    CHECK_THROWS_AS(aligned_distance(f, std::vector<cplx>(3)), DomainError);
}

TEST_CASE("convergence study rejects bad epsilon lists") {
    SpectralConfig c{cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi};
    FieldSampler ref = [](double, double) { return cplx(1.0); };
    GridSpec g{-1, 1, 3, 0, 0.1, 2};
    CHECK_THROWS_AS(convergence_study(c, {1e-3, 1e-2}, ref, g), DomainError);
    CHECK_THROWS_AS(convergence_study(c, {1e-2, -1e-3}, ref, g), DomainError);
}

TEST_CASE("unit condensate") {
    // the time stencil alone leaves 2 q (1 - sin 2h / 2h); Richardson removes it
    FieldSampler q = [](double, double t) { return std::exp(2.0 * kI * t); };
    double h = 1e-3, stencil = 2.0 * (1.0 - std::sin(2 * h) / (2 * h));
    for (double t : {-1.0, 0.0, 0.7}) {
        CHECK(std::abs(std::abs(fnls_residual(q, 0.3, t, h)) - stencil) < 1e-10);
        CHECK(std::abs(fnls_residual_richardson(q, 0.3, t, h)) < 1e-10);
    }
}

TEST_CASE("stencil error is second order on an exact solution") {
    SpectralConfig c{cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi};
    LimitSolitonParams p = soliton_params(c);
    FieldSampler q = [&](double x, double t) { return q_soliton(x, t, p); };
    for (auto [x, t] : {std::pair{0.3, 0.2}, std::pair{-1.1, 0.6}}) {
        double ratio = std::abs(fnls_residual(q, x, t, 1e-2)) / std::abs(fnls_residual(q, x, t, 1e-3));
        CHECK(ratio == doctest::Approx(100.0).epsilon(0.2));
    }
}

TEST_CASE("perturbation and triangle inequality") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto field = [&] {
        std::vector<cplx> v(40);
        for (cplx& z : v) z = cplx(u(rng), u(rng));
        return v;
    };
    for (int k = 0; k < 10; ++k) {
        auto f = field(), g = field(), h = field();
        double fg = aligned_distance(f, g).distance, gh = aligned_distance(g, h).distance;
        double fh = aligned_distance(f, h).distance;
        CHECK(fh <= fg + gh + 1e-10);
        CHECK(std::abs(fg - aligned_distance(g, f).distance) < 1e-12);
        std::vector<cplx> pert = f;
        for (cplx& z : pert) z += 1e-4 * std::polar(1.0, u(rng) * kPi);
        CHECK(aligned_distance(pert, f).distance <= 2e-4);
    }
}

TEST_CASE("single-epsilon study") {
    SpectralConfig c{cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi};
    LimitSolitonParams p = soliton_params(c);
    FieldSampler ref = [&](double x, double t) { return q_soliton(x, t, p); };
    ConvergenceReport r = convergence_study(c, {1e-2}, ref, GridSpec{-1, 1, 5, -0.25, 0.25, 3});
    CHECK(r.distances.size() == 1);
    CHECK(r.distances[0] >= 0.0);
}
