#pragma once

#include <vector>

#include "twophase/spectral_core.hpp"

namespace twophase {

// Small dense row-major matrices for the handful of fixed-size solves in the
// library (3x3 Richardson fits, the 8x4 residual system).
template <class T>
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<T> a;
    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, T{}) {}
    T& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<cplx>;

// Square real system with complex right-hand side, partial pivoting.
std::vector<cplx> solve_real_system(RealMatrix m, std::vector<cplx> rhs);

struct LeastSquaresResult {
    std::vector<cplx> x;
    std::vector<double> singular_values;  // descending
    double condition = 0.0;
    double residual = 0.0;  // max |A x - b|
};

// Minimum-norm least squares via one-sided Jacobi SVD of the real embedding
// [[Re A, -Im A], [Im A, Re A]]. Singular values of A appear twice in the
// embedding; each is reported once.
LeastSquaresResult least_squares(const ComplexMatrix& a, const std::vector<cplx>& b);
LeastSquaresResult least_squares(const RealMatrix& a, const std::vector<double>& b);

}  // namespace twophase
