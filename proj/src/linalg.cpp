#include "qvbs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qvbs/qcore.hpp"

namespace qvbs::linalg {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& input, double rel_tol, int max_sweeps) {
    if (input.rows() != input.cols()) throw InvalidArgument("jacobi_eigen needs a square matrix");
    const Eigen::Index n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::Identity(n, n);
    const double scale = a.norm();
    const double threshold = rel_tol * (scale > 0.0 ? scale : 1.0);

    SymmetricEigen out;
    for (; out.sweeps < max_sweeps; ++out.sweeps) {
        if (off_diagonal_norm(a) <= threshold) {
            out.converged = true;
            break;
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index r = p + 1; r < n; ++r) {
                const double apr = a(p, r);
                if (apr == 0.0) continue;
                // Rutishauser's stable rotation angle.
                const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akr = a(k, r);
                    a(k, p) = c * akp - s * akr;
                    a(k, r) = s * akp + c * akr;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), ark = a(r, k);
                    a(p, k) = c * apk - s * ark;
                    a(r, k) = s * apk + c * ark;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkr = v(k, r);
                    v(k, p) = c * vkp - s * vkr;
                    v(k, r) = s * vkp + c * vkr;
                }
            }
        }
    }
    if (!out.converged && off_diagonal_norm(a) <= threshold) out.converged = true;

    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = a(order[k], order[k]);
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

Matrix matrix_power(const Matrix& m, int n) {
    if (n < 0) throw InvalidArgument("matrix_power needs n >= 0");
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

}  // namespace qvbs::linalg
