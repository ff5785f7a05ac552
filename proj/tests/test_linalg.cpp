#include <doctest.h>

#include <cmath>

#include "twophase/linalg.hpp"

using namespace twophase;

TEST_CASE("real system with complex right-hand side") {
    RealMatrix m(3, 3);
    double v[3][3] = {{0, 2, 1}, {1, 1, 0}, {3, 0, 1}};  // zero pivot forces a swap
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
    std::vector<cplx> x_true{cplx(1, 2), cplx(-1, 0), cplx(0.5, -3)};
    std::vector<cplx> rhs(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rhs[i] += v[i][j] * x_true[j];
    auto x = solve_real_system(m, rhs);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(x[i] - x_true[i]) < 1e-14);
    RealMatrix sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    CHECK_THROWS_AS(solve_real_system(sing, {cplx(1), cplx(2)}), SingularError);
}

TEST_CASE("complex least squares recovers a consistent solution") {
    ComplexMatrix a(8, 4);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = cplx(std::sin(i + 2 * j + 1.0), std::cos(3 * i - j + 0.5));
    std::vector<cplx> x{cplx(1, -1), cplx(0.2, 0.3), cplx(-2, 0), cplx(0, 4)};
    std::vector<cplx> b(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 4; ++j) b[i] += a(i, j) * x[j];
    auto r = least_squares(a, b);
    REQUIRE(r.x.size() == 4);
    for (int j = 0; j < 4; ++j) CHECK(std::abs(r.x[j] - x[j]) < 1e-12);
    CHECK(r.residual < 1e-13);
    CHECK(r.singular_values.size() == 4);
    CHECK(r.condition >= 1.0);
}

TEST_CASE("real least squares fits an overdetermined line") {
    RealMatrix a(4, 2);
    std::vector<double> b(4);
    for (int i = 0; i < 4; ++i) {
        a(i, 0) = 1;
        a(i, 1) = i;
        b[i] = 2.0 + 0.5 * i + (i % 2 ? 0.1 : -0.1);
    }
    auto r = least_squares(a, b);
    // normal-equation solution
    CHECK(r.x[0].real() == doctest::Approx(1.94).epsilon(1e-12));
    CHECK(r.x[1].real() == doctest::Approx(0.54).epsilon(1e-12));
}
