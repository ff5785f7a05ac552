#include <doctest.h>

#include <cmath>

#include "twophase/finite_genus.hpp"

using namespace twophase;

namespace {

SpectralConfig desk(double eps) { return {cplx(1, 1), cplx(-1, 1.5), eps, 0.3, kPi}; }

// Frozen from an independent 30-digit evaluation of the periods and
// regularized integrals (tools/oracle_mp.py, the same cycle choice).
struct Frozen {
    double eps;
    cplx b11;
    double b12;
    cplx v1, w1, r1;
    double e, n, omega0;
};
const Frozen kFrozen[] = {
    {1e-2, cplx(-17.1367524601594, -0.855895985679941), -3.05329967949262, cplx(4.31467242957929, -2.7742515578293),
     cplx(8.36590113574815, 12.9163534018868), cplx(3.241704678311, 1.92645980330496), 1.99998333394775,
     -2.00012702696612, -0.250000788596996},
    {1e-3, cplx(-21.7479245140255, -0.859162878152124), -3.05876706227436, cplx(4.32342278102878, -2.77488473276036),
     cplx(8.32897761792685, 12.9674942450268), cplx(3.24466062505636, 1.92835932310009), 1.99999983354918,
     -2.00000127107291, -0.250000007890474},
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("theta data against the oracle") {
    for (const Frozen& f : kFrozen) {
        ThetaSolutionData d = theta_solution_data(desk(f.eps));
        CHECK(rel(d.period_matrix.m11, f.b11) < 1e-10);
        CHECK(rel(d.period_matrix.m12, f.b12) < 1e-10);
        CHECK(rel(d.period_matrix.m22, std::conj(f.b11)) < 1e-10);
        CHECK(rel(d.v_vec[0], f.v1) < 1e-10);
        CHECK(rel(d.w_vec[0], f.w1) < 1e-10);
        CHECK(rel(d.r_vec[0], f.r1) < 1e-10);
        CHECK(std::abs(d.e_const - f.e) < 1e-10);
        CHECK(std::abs(d.n_const - f.n) < 1e-10);
        CHECK(std::abs(d.omega0 - f.omega0) < 1e-10);
    }
}

TEST_CASE("structural invariants") {
    ThetaSolutionData d = theta_solution_data(desk(1e-3));
    CHECK(d.normalization_residual < 1e-10);
    CHECK(d.differential_a_residual < 1e-10);
    CHECK(d.symmetry_error < 1e-10);
    CHECK(d.conjugation_error < 1e-10);
    CHECK(d.reality_error < 1e-10);
    CHECK(d.re_b_eigenvalues[0] < 0.0);
    CHECK(d.re_b_eigenvalues[1] < 0.0);
    CHECK(d.amplitude == doctest::Approx(2.0 * std::sqrt(std::abs(d.omega0))));
}

TEST_CASE("periods do not depend on the representative path") {
    SpectralConfig c = desk(1e-2);
    ThetaSolutionData straight = theta_solution_data(c);
    for (double bend : {0.3, -0.25}) {
        ThetaSolutionData bent = theta_solution_data(c, bent_homology(c, bend));
        CHECK((bent.period_matrix - straight.period_matrix).max_abs() < 1e-9);
        CHECK(std::abs(bent.v_vec[1] - straight.v_vec[1]) < 1e-9);
        CHECK(std::abs(bent.r_vec[1] - straight.r_vec[1]) < 1e-9);
    }
}

TEST_CASE("pinched period grows by 2 ln 10 per decade") {
    double b2 = theta_solution_data(desk(1e-2)).period_matrix.m11.real();
    double b3 = theta_solution_data(desk(1e-3)).period_matrix.m11.real();
    double b4 = theta_solution_data(desk(1e-4)).period_matrix.m11.real();
    CHECK(std::abs((b2 - b3) - 2.0 * std::log(10.0)) < 0.05);
    CHECK(std::abs((b3 - b4) - 2.0 * std::log(10.0)) < 0.005);
}

TEST_CASE("theta function") {
    Matrix2 b{cplx(-3.0, 0.5), cplx(-1.0), cplx(-1.0), cplx(-3.0, -0.5)};
    Vec2 z{cplx(0.3, 0.2), cplx(-0.1, 0.4)};
    int n = theta_truncation(b, 0.3);
    CHECK(theta_tail_bound(b, 0.3, n) <= 1e-12);
    CHECK(theta_tail_bound(b, 0.3, n - 1) > 1e-12);
    // even in z, periodic under z -> z + 2 pi i e_j
    Vec2 mz{-z[0], -z[1]};
    CHECK(std::abs(theta_sum(z, b, n) - theta_sum(mz, b, n)) < 1e-13);
    Vec2 shifted{z[0] + 2.0 * kPi * kI, z[1]};
    CHECK(std::abs(theta_sum(z, b, n) - theta_sum(shifted, b, n)) < 1e-12);
    // quasi-periodic under z -> z + B e_1
    Vec2 zb{z[0] + b.m11, z[1] + b.m21};
    cplx factor = std::exp(-0.5 * b.m11 - z[0]);
    int nb = theta_truncation(b, 3.5);
    CHECK(std::abs(theta_sum(zb, b, nb) - factor * theta_sum(z, b, nb)) < 1e-11);
    ScaledTheta s = theta_sum_scaled(z, b, n);
    CHECK(std::abs(s.value() - theta_sum(z, b, n)) < 1e-14);
}

TEST_CASE("q_theta is conjugation consistent and bounded") {
    SpectralConfig c = desk(1e-3);
    ThetaSolutionData d = theta_solution_data(c);
    cplx q0 = q_theta(0.0, 0.0, c, d);
    CHECK(std::isfinite(std::abs(q0)));
    CHECK(std::abs(q_theta(0.5, 0.1, c, d) - q_theta(0.5, 0.1, c, d, 12)) < 1e-11);
    CHECK_THROWS_AS(q_theta(0.5, 0.1, c, d, 1), ConvergenceError);
}
