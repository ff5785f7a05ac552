#include <doctest.h>

#include <cmath>

#include "twophase/parametrix.hpp"

using namespace twophase;

namespace {
SpectralConfig desk() { return {cplx(1, 1), cplx(-1, 1.5), 1e-2, 0.3, kPi}; }
}  // namespace

TEST_CASE("phase normalization at infinity") {
    SpectralConfig c = desk();
    CHECK(d_zero_infinity(1.0, 1.0, c) == 2.0);
    CHECK(d_zero_infinity(0.0, 0.0, c) == 0.0);
    // d0 - d0_inf decays like 1/z; larger z only trades it for cancellation
    cplx dir{0.8, -0.6};
    double e1 = std::abs(d_zero(1e3 * dir, 0.7, -0.3, c) - d_zero_infinity(0.7, -0.3, c));
    double e2 = std::abs(d_zero(2e3 * dir, 0.7, -0.3, c) - d_zero_infinity(0.7, -0.3, c));
    CHECK(e1 < 1e-2);
    CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.01));
    CHECK((psi_zero(2e3 * dir, 0.7, -0.3, c) - Matrix2::identity()).max_abs() < 1e-2);
}

TEST_CASE("psi0 jumps across the middle cut") {
    SpectralConfig c = desk();
    for (double s : {0.1, 0.5, 0.93}) {
        SegmentPoint plus = on_segment(cut_middle(c), s, +1), minus = on_segment(cut_middle(c), s, -1);
        Matrix2 lhs = psi_zero(plus, 0.4, 0.2, c);
        Matrix2 rhs = psi_zero(minus, 0.4, 0.2, c) * psi_zero_jump(plus.z(), 0.4, 0.2);
        CHECK((lhs - rhs).max_abs() < 1e-10);
        CHECK(std::abs(lhs.det() - 1.0) < 1e-12);
    }
}

TEST_CASE("regions and boundary signs") {
    SpectralConfig c = desk();
    RegionConfig reg = make_regions(c);
    CHECK(std::abs(reg.center_minus - std::conj(reg.center_plus)) == 0.0);
    CHECK(boundary_sign(reg.center_plus + reg.radius, reg) == 1);
    CHECK(boundary_sign(reg.center_minus - kI * reg.radius, reg) == -1);
    CHECK_THROWS_AS(boundary_sign(reg.center_plus, reg), DomainError);
}

TEST_CASE("local parametrices are unimodular") {
    SpectralConfig c = desk();
    NormalizationData n = normalize(c);
    RegionConfig reg = make_regions(c);
    for (double ang : {0.3, 2.0, 4.5}) {
        cplx u = std::polar(reg.radius, ang);
        CHECK(std::abs(psi_local(reg.center_plus + u, 0.2, 0.1, c, n, +1).det() - 1.0) < 1e-12);
        CHECK(std::abs(psi_local(reg.center_minus + std::conj(u), 0.2, 0.1, c, n, -1).det() - 1.0) < 1e-12);
        Matrix2 jm = jump_m_q(reg.center_plus + u, 0.2, 0.1, c, n, reg);
        CHECK(std::abs(jm.det() - 1.0) < 1e-12 * std::max(1.0, jm.max_abs() * jm.max_abs()));
    }
}
