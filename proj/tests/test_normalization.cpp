#include <doctest.h>

#include <cmath>

#include "twophase/normalization.hpp"

using namespace twophase;

namespace {

SpectralConfig desk(double eps) { return {cplx(1, 1), cplx(-1, 1.5), eps, 0.3, kPi}; }

// Frozen from an independent 30-digit tanh-sinh evaluation of the same
// moment system (tools/oracle_mp.py).
struct Frozen {
    double eps;
    cplx alpha_hat;
    double d_inf;
};
const Frozen kFrozen[] = {
    {1e-2, cplx(0.427947992839971, -7.04172639033341), 0.963229901652481},
    {1e-3, cplx(0.429581439076062, -9.34457872587556), 0.964179661550045},
};

}  // namespace

TEST_CASE("H constant") {
    cplx h = h_constant(desk(1e-3));
    CHECK(std::abs(h - cplx(1.191319449426, -2.599242435112)) < 1e-11);
}

TEST_CASE("alpha_hat and d_inf against the oracle") {
    for (const Frozen& f : kFrozen) {
        NormalizationData n = normalize(desk(f.eps));
        CHECK(std::abs(n.alpha_hat - f.alpha_hat) < 1e-9);
        CHECK(std::abs(n.d_infinity - f.d_inf) < 1e-9);
        CHECK(std::abs(n.alpha_hat_star - std::conj(n.alpha_hat)) < 1e-10);
        CHECK(std::abs(n.d_infinity_imag) < 1e-10);
    }
}

TEST_CASE("alpha_hat approaches its logarithmic form") {
    double prev = 1e300;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        SpectralConfig c = desk(eps);
        cplx ah = solve_alpha_hat(c), asym = alpha_hat_asymptotic(c);
        double ratio = std::abs(ah - asym) / std::abs(asym);
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK(prev < 0.03);
}

TEST_CASE("d jumps and large-z limit") {
    SpectralConfig c = desk(1e-2);
    NormalizationData n = normalize(c);
    for (double r : d_jump_residuals(c, n)) CHECK(r < 1e-8);
    cplx far = d_function(cplx(3e5, 4e5), c, n);
    CHECK(std::abs(far - n.d_infinity) < 1e-5);
}

TEST_CASE("d respects the conjugation symmetry") {
    SpectralConfig c = desk(1e-2);
    NormalizationData n = normalize(c);
    for (cplx z : {cplx(0.3, 0.7), cplx(-2.0, 0.4), cplx(1.5, 2.5)}) {
        cplx up = d_function(z, c, n), down = d_function(std::conj(z), c, n);
        CHECK(std::abs(up - std::conj(down)) < 1e-10 * std::max(1.0, std::abs(up)));
    }
}
