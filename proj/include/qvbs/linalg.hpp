#pragma once

#include <Eigen/Dense>

namespace qvbs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace linalg {

struct SymmetricEigen {
    Vector values;   // ascending
    Matrix vectors;  // columns, orthonormal
    int sweeps = 0;
    bool converged = false;
};

/// Cyclic Jacobi eigendecomposition of a real symmetric matrix.
///
/// Sweeps rotate every off-diagonal pair until the off-diagonal Frobenius norm
/// drops below rel_tol * ||A||_F. Intended for the small blocks of the
/// transfer matrix (dimension <= 7 at desk scale), not for large problems.
SymmetricEigen jacobi_eigen(const Matrix& a, double rel_tol = 1e-14, int max_sweeps = 100);

/// m^n by binary exponentiation (n >= 0).
Matrix matrix_power(const Matrix& m, int n);

}  // namespace linalg
}  // namespace qvbs
