#pragma once

#include <complex>

#include "twophase/errors.hpp"

namespace twophase {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Branch points E1, E3 in the upper half plane, E2 = E3 + epsilon, and the
// conjugates E_{-j}. alpha and beta are the phases of the jump data.
struct SpectralConfig {
    cplx e1{1.0, 1.0};
    cplx e3{-1.0, 1.5};
    double epsilon = 1e-3;
    double alpha = 0.0;
    double beta = kPi;

    cplx e2() const { return e3 + epsilon; }
    cplx em1() const { return std::conj(e1); }
    cplx em2() const { return std::conj(e2()); }
    cplx em3() const { return std::conj(e3); }

    // Throws ConfigError naming the first violated inequality.
    void validate() const;
};

struct Matrix2 {
    cplx m11{}, m12{}, m21{}, m22{};

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 sigma2() { return {0.0, -kI, kI, 0.0}; }
    static Matrix2 sigma3() { return {1.0, 0.0, 0.0, -1.0}; }
    static Matrix2 sigma_plus() { return {0.0, 1.0, 0.0, 0.0}; }
    static Matrix2 sigma_minus() { return {0.0, 0.0, 1.0, 0.0}; }
    // e^{i a sigma3}
    static Matrix2 phase(cplx a);

    cplx det() const { return m11 * m22 - m12 * m21; }
    cplx trace() const { return m11 + m22; }
    Matrix2 inverse() const;
    Matrix2 conj() const { return {std::conj(m11), std::conj(m12), std::conj(m21), std::conj(m22)}; }
    // max |entry|
    double max_abs() const;

    Matrix2& operator+=(const Matrix2& o);
    Matrix2& operator-=(const Matrix2& o);
    Matrix2& operator*=(cplx s);
};

Matrix2 operator+(Matrix2 a, const Matrix2& b);
Matrix2 operator-(Matrix2 a, const Matrix2& b);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(cplx s, Matrix2 a);
Matrix2 operator*(Matrix2 a, cplx s);
Matrix2 operator/(Matrix2 a, cplx s);

struct SegmentContour {
    cplx a, b;  // oriented a -> b
};

// A point z = p + t (q - p) of an oriented segment, remembered through both
// parameters so that z - p and z - q are available without cancellation.
// side = +1 is the left of p -> q, -1 the right, 0 means "not on a cut".
struct SegmentPoint {
    cplx p, q;
    double t = 0.0;
    double omt = 1.0;  // 1 - t, computed independently
    int side = 0;

    cplx z() const { return t <= 0.5 ? p + t * (q - p) : q - omt * (q - p); }
    // z - e, exact when e is one of the segment's endpoints
    cplx diff(cplx e) const;
};

SegmentPoint on_segment(const SegmentContour& seg, double t, int side);

cplx principal_sqrt(cplx z);
cplx theta_phase(cplx z, double x, double t);

// sqrt((z - a)/(z - b)) on the principal branch, or its one-sided boundary
// value when {a, b} are the endpoints of the segment carrying the point.
cplx sqrt_ratio(const SegmentPoint& pt, cplx a, cplx b);

// R(z) = (z-E2)(z-E_{-1})(z-E_{-3}) sqrt((z-E3)/(z-E2)) sqrt((z-E1)/(z-E_{-1}))
//        sqrt((z-E_{-2})/(z-E_{-3})),  R ~ z^3.
cplx radial_r(cplx z, const SpectralConfig& cfg);
cplx radial_r(const SegmentPoint& pt, const SpectralConfig& cfg);
// Boundary values on a cut, + meaning the left of seg's orientation.
cplx radial_r_plus(const SegmentContour& seg, double t, const SpectralConfig& cfg);
cplx radial_r_minus(const SegmentContour& seg, double t, const SpectralConfig& cfg);
// prod (z - E_j)(z - E_{-j}), the polynomial R^2 must equal
cplx curve_polynomial(cplx z, const SpectralConfig& cfg);

// R0(z) = (z - E_{-1}) sqrt((z - E1)/(z - E_{-1}))
cplx r_zero(cplx z, const SpectralConfig& cfg);
cplx r_zero(const SegmentPoint& pt, const SpectralConfig& cfg);

// which = 0: ((z-E1)/(z-E_{-1}))^{1/4}
// which = +1: ((z-E3)/(z-E2))^{1/4}
// which = -1: ((z-E_{-3})/(z-E_{-2}))^{-1/4}
cplx mu_factor(cplx z, const SpectralConfig& cfg, int which);
cplx mu_factor(const SegmentPoint& pt, const SpectralConfig& cfg, int which);

Matrix2 cayley_matrix(cplx mu);

// Closed cuts [E_{-3},E_{-2}], [E_{-1},E1], [E2,E3] in the orientation of the
// RHP contour (E_{-3} -> E_{-2}, E_{-1} -> E1, E2 -> E3).
SegmentContour cut_lower(const SpectralConfig& cfg);
SegmentContour cut_middle(const SpectralConfig& cfg);
SegmentContour cut_upper(const SpectralConfig& cfg);

double distance_to_segment(cplx z, cplx a, cplx b);
bool on_closed_segment(cplx z, cplx a, cplx b, double tol = 0.0);

}  // namespace twophase
