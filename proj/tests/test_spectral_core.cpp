#include <doctest.h>

#include <cmath>
#include <random>

#include "twophase/spectral_core.hpp"

using namespace twophase;

namespace {

SpectralConfig base() { return {cplx(1, 1), cplx(-1, 1.5), 1e-3, 0.3, kPi}; }

std::string message_of(const SpectralConfig& c) {
    try {
        c.validate();
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("config invariants name the violated inequality") {
    SpectralConfig c = base();
    CHECK(message_of(c).empty());
    c.e1 = {-2.0, 1.0};
    CHECK(message_of(c).find("Re(E1) > Re(E3)") != std::string::npos);
    c = base();
    c.e1 = {1.0, -1.0};
    CHECK(message_of(c).find("Im(E1) > 0") != std::string::npos);
    c = base();
    c.epsilon = 0.0;
    CHECK(message_of(c).find("epsilon > 0") != std::string::npos);
    c = base();
    c.epsilon = 2.5;
    CHECK(message_of(c).find("Re(E3) + epsilon < Re(E1)") != std::string::npos);
    c = base();
    c.beta = 4.0;
    CHECK(message_of(c).find("range error") != std::string::npos);
    c.beta = -kPi;
    CHECK(message_of(c).empty());
}

TEST_CASE("derived branch points") {
    SpectralConfig c = base();
    CHECK(c.e2() == cplx(-1.0 + 1e-3, 1.5));
    CHECK(c.em1() == cplx(1, -1));
    CHECK(c.em2() == std::conj(c.e2()));
    CHECK(c.em3() == cplx(-1, -1.5));
}

TEST_CASE("matrix algebra") {
    Matrix2 m{cplx(1, 2), cplx(0, -1), cplx(3, 0.5), cplx(-2, 1)};
    Matrix2 p = m * m.inverse();
    CHECK((p - Matrix2::identity()).max_abs() < 1e-15);
    CHECK(Matrix2::sigma3().det() == cplx(-1.0));
    CHECK((Matrix2::sigma2() * Matrix2::sigma2() - Matrix2::identity()).max_abs() == 0.0);
    Matrix2 ph = Matrix2::phase(cplx(0.4, 0.2));
    CHECK(std::abs(ph.det() - 1.0) < 1e-15);
    CHECK(std::abs(ph.m11 - std::exp(kI * cplx(0.4, 0.2))) < 1e-15);
    Matrix2 z{0.0, 1.0, 0.0, 0.0};
    CHECK_THROWS_AS(z.inverse(), SingularError);
}

TEST_CASE("cayley matrix is unimodular") {
    for (cplx mu : {cplx(1, 0), cplx(0.3, 2.0), cplx(-5, 0.1)}) CHECK(std::abs(cayley_matrix(mu).det() - 1.0) < 1e-13);
    CHECK((cayley_matrix(1.0) - Matrix2::identity()).max_abs() < 1e-15);
}

TEST_CASE("principal sqrt refuses the negative axis") {
    CHECK(principal_sqrt(cplx(4.0, 0.0)) == cplx(2.0, 0.0));
    CHECK_THROWS_AS(principal_sqrt(cplx(-1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(principal_sqrt(cplx(0.0, 0.0)), DomainError);
}

TEST_CASE("R squares to the curve polynomial and grows like z^3") {
    SpectralConfig c = base();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 50; ++k) {
        cplx z{u(rng), u(rng)};
        if (distance_to_segment(z, c.em1(), c.e1) < 1e-3 || distance_to_segment(z, c.e2(), c.e3) < 1e-3 ||
            distance_to_segment(z, c.em3(), c.em2()) < 1e-3)
            continue;
        cplx r = radial_r(z, c);
        CHECK(std::abs(r * r - curve_polynomial(z, c)) < 1e-12 * std::max(1.0, std::norm(z) * std::norm(z) * std::norm(z)));
    }
    cplx big{1e4, 3e3};
    CHECK(std::abs(radial_r(big, c) / (big * big * big) - 1.0) < 1e-3);
}

TEST_CASE("R is odd across each cut") {
    SpectralConfig c = base();
    for (SegmentContour seg : {cut_lower(c), cut_middle(c), cut_upper(c)})
        for (double t : {1e-9, 0.1, 0.5, 0.9, 1.0 - 1e-9}) {
            cplx p = radial_r_plus(seg, t, c), m = radial_r_minus(seg, t, c);
            CHECK(std::abs(p + m) <= 1e-14 * std::abs(p));
        }
}

TEST_CASE("boundary values agree with the limit from the side") {
    SpectralConfig c = base();
    SegmentContour seg = cut_middle(c);
    cplx dir = (seg.b - seg.a) / std::abs(seg.b - seg.a);
    for (double t : {0.2, 0.5, 0.8}) {
        cplx z0 = seg.a + t * (seg.b - seg.a);
        cplx left = radial_r(z0 + 1e-9 * kI * dir, c);
        cplx right = radial_r(z0 - 1e-9 * kI * dir, c);
        CHECK(std::abs(left - radial_r_plus(seg, t, c)) < 1e-6);
        CHECK(std::abs(right - radial_r_minus(seg, t, c)) < 1e-6);
    }
}

TEST_CASE("square-root ratio on its own segment") {
    SpectralConfig c = base();
    SegmentContour seg{c.em1(), c.e1};
    // t = 1/2: |z - a| = |z - b|, left side value -i
    CHECK(std::abs(sqrt_ratio(on_segment(seg, 0.5, +1), c.em1(), c.e1) - cplx(0, -1)) < 1e-15);
    CHECK(std::abs(sqrt_ratio(on_segment(seg, 0.5, -1), c.em1(), c.e1) - cplx(0, 1)) < 1e-15);
}

TEST_CASE("theta phase") {
    CHECK(theta_phase(cplx(1, 0), 2.0, 3.0) == cplx(2.0 * 3.0 + 2.0, 0.0));
    CHECK(std::abs(theta_phase(cplx(0, 1), 1.0, 1.0) - cplx(-2.0, 1.0)) < 1e-15);
}

TEST_CASE("mu factors have the quartic-root property") {
    SpectralConfig c = base();
    cplx z{0.4, 0.3};
    cplx m0 = mu_factor(z, c, 0);
    CHECK(std::abs(std::pow(m0, 4) - (z - c.e1) / (z - c.em1())) < 1e-13);
    cplx mm = mu_factor(z, c, -1);
    CHECK(std::abs(std::pow(mm, -4) - (z - c.em3()) / (z - c.em2())) < 1e-12);
}
