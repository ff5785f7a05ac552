#include "twophase/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace twophase {

std::vector<cplx> solve_real_system(RealMatrix m, std::vector<cplx> rhs) {
    const int n = m.rows;
    if (m.cols != n || int(rhs.size()) != n) throw DomainError("solve_real_system: shape mismatch");
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (m(piv, k) == 0.0) throw SingularError("solve_real_system: singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(rhs[k], rhs[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            double f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<cplx> x(n);
    for (int i = n - 1; i >= 0; --i) {
        cplx s = rhs[i];
        for (int j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
        x[i] = s / m(i, i);
    }
    return x;
}

namespace {

struct RealSvd {
    RealMatrix u;  // rows x cols, columns scaled by sigma before normalization
    RealMatrix v;  // cols x cols
    std::vector<double> sigma;
};

// Hestenes one-sided Jacobi: rotate column pairs of A until mutually
// orthogonal; then A V = U diag(sigma).
RealSvd jacobi_svd(RealMatrix a) {
    const int m = a.rows, n = a.cols;
    RealMatrix v(n, n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (int i = 0; i < m; ++i) {
                    alpha += a(i, p) * a(i, p);
                    beta += a(i, q) * a(i, q);
                    gamma += a(i, p) * a(i, q);
                }
                if (gamma == 0.0) continue;
                double rel = std::abs(gamma) / std::sqrt(alpha * beta);
                off = std::max(off, rel);
                if (rel < 1e-15) continue;
                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
                for (int i = 0; i < m; ++i) {
                    double x = a(i, p), y = a(i, q);
                    a(i, p) = c * x - s * y;
                    a(i, q) = s * x + c * y;
                }
                for (int i = 0; i < n; ++i) {
                    double x = v(i, p), y = v(i, q);
                    v(i, p) = c * x - s * y;
                    v(i, q) = s * x + c * y;
                }
            }
        }
        if (off < 1e-15) break;
    }
    RealSvd out{a, v, std::vector<double>(n)};
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += a(i, j) * a(i, j);
        out.sigma[j] = std::sqrt(s);
    }
    return out;
}

// x = V diag(1/sigma) U^T b, dropping singular values below rcond * max.
std::vector<double> svd_solve(const RealSvd& svd, const std::vector<double>& b, double rcond) {
    const int m = svd.u.rows, n = svd.u.cols;
    double smax = *std::max_element(svd.sigma.begin(), svd.sigma.end());
    std::vector<double> x(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double s = svd.sigma[j];
        if (s <= rcond * smax) continue;
        double proj = 0.0;
        for (int i = 0; i < m; ++i) proj += svd.u(i, j) * b[i];
        proj /= s * s;  // u columns carry a factor sigma
        for (int k = 0; k < n; ++k) x[k] += svd.v(k, j) * proj;
    }
    return x;
}

}  // namespace

LeastSquaresResult least_squares(const RealMatrix& a, const std::vector<double>& b) {
    if (int(b.size()) != a.rows) throw DomainError("least_squares: shape mismatch");
    RealSvd svd = jacobi_svd(a);
    std::vector<double> x = svd_solve(svd, b, 1e-15);
    LeastSquaresResult out;
    out.x.assign(x.begin(), x.end());
    out.singular_values = svd.sigma;
    std::sort(out.singular_values.rbegin(), out.singular_values.rend());
    double smin = out.singular_values.back();
    out.condition = smin > 0.0 ? out.singular_values.front() / smin : INFINITY;
    for (int i = 0; i < a.rows; ++i) {
        double r = -b[i];
        for (int j = 0; j < a.cols; ++j) r += a(i, j) * x[j];
        out.residual = std::max(out.residual, std::abs(r));
    }
    return out;
}

LeastSquaresResult least_squares(const ComplexMatrix& a, const std::vector<cplx>& b) {
    const int m = a.rows, n = a.cols;
    if (int(b.size()) != m) throw DomainError("least_squares: shape mismatch");
    RealMatrix e(2 * m, 2 * n);
    std::vector<double> rb(2 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            e(i, j) = a(i, j).real();
            e(i, j + n) = -a(i, j).imag();
            e(i + m, j) = a(i, j).imag();
            e(i + m, j + n) = a(i, j).real();
        }
        rb[i] = b[i].real();
        rb[i + m] = b[i].imag();
    }
    RealSvd svd = jacobi_svd(e);
    std::vector<double> x = svd_solve(svd, rb, 1e-15);
    LeastSquaresResult out;
    out.x.resize(n);
    for (int j = 0; j < n; ++j) out.x[j] = cplx(x[j], x[j + n]);
    std::vector<double> s = svd.sigma;
    std::sort(s.rbegin(), s.rend());
    for (size_t k = 0; k < s.size(); k += 2) out.singular_values.push_back(s[k]);
    double smin = out.singular_values.back();
    out.condition = smin > 0.0 ? out.singular_values.front() / smin : INFINITY;
    for (int i = 0; i < m; ++i) {
        cplx r = -b[i];
        for (int j = 0; j < n; ++j) r += a(i, j) * out.x[j];
        out.residual = std::max(out.residual, std::abs(r));
    }
    return out;
}

}  // namespace twophase
