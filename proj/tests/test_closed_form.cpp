#include <doctest.h>

#include <cmath>

#include "twophase/closed_form.hpp"

using namespace twophase;

TEST_CASE("Peregrine peak") {
    CHECK(std::abs(q_peregrine_standard(0.0, 0.0) - cplx(-3.0)) < 1e-15);
    cplx e1{0.5, 2.0};
    CHECK(std::abs(q_peregrine(0.0, 0.0, e1) - cplx(-6.0)) < 1e-14);
    CHECK(std::abs(std::abs(q_peregrine(1e4, 0.0, e1)) - 2.0) < 1e-6);
    CHECK_THROWS_AS(q_peregrine(0, 0, cplx(1.0, 0.0)), DomainError);
}

TEST_CASE("Peregrine rescaling") {
    // q(x, t) with E1 = i/sqrt(2)... reduces to the standard form after
    // x -> A x, t -> A^2 t, q -> q / A when Re E1 = 0
    double a = 1.7;
    for (auto [x, t] : {std::pair{0.3, 0.1}, std::pair{-1.0, 0.5}}) {
        cplx lhs = q_peregrine(x / a, t / (a * a), cplx(0, a)) / a;
        cplx rhs = q_peregrine_standard(x, t);
        CHECK(std::abs(std::abs(lhs) - std::abs(rhs)) < 1e-14);
    }
}

TEST_CASE("plane wave has constant modulus") {
    SpectralConfig c{cplx(0.7, 1.3), cplx(-1, 1.5), 1e-3, 0.0, kPi};
    for (double x : {-3.0, 0.0, 2.5}) CHECK(std::abs(std::abs(q_planewave(x, 0.4, c)) - 1.3) < 1e-15);
}

TEST_CASE("soliton parameters for the desk configuration") {
    SpectralConfig c{cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi};
    LimitSolitonParams p = soliton_params(c);
    CHECK(p.A == 1.0);
    CHECK(p.E == 2.0);
    CHECK(p.N == -2.0);
    CHECK(p.b_below_one);
    CHECK(p.B > 0.0);
    // far from the core the solution returns to the background |q| = A
    CHECK(std::abs(std::abs(q_soliton(60.0 / std::abs(p.eta), 0.0, p)) - 1.0) < 1e-8);
    CHECK(soliton_denominator(0.3, 0.2, p) >= 1.0 - p.B);
}
