#include "qvbs/spin_ops.hpp"

#include <cmath>
#include <cstdlib>

#include "qvbs/qcore.hpp"

namespace qvbs::spin_ops {

namespace {

int dim(int spin) {
    if (spin < 0) throw InvalidArgument("spin must be nonnegative");
    return 2 * spin + 1;
}

}  // namespace

Matrix sz(int spin) {
    Matrix a = Matrix::Zero(dim(spin), dim(spin));
    for (int m = -spin; m <= spin; ++m) a(m + spin, m + spin) = m;
    return a;
}

Matrix splus(int spin) {
    Matrix a = Matrix::Zero(dim(spin), dim(spin));
    for (int m = -spin; m < spin; ++m) a(m + 1 + spin, m + spin) = std::sqrt(double(spin - m) * (spin + m + 1));
    return a;
}

Matrix sminus(int spin) {
    Matrix a = Matrix::Zero(dim(spin), dim(spin));
    for (int m = -spin + 1; m <= spin; ++m) a(m - 1 + spin, m + spin) = std::sqrt(double(spin + m) * (spin - m + 1));
    return a;
}

Matrix projector(int spin, int m) {
    if (std::abs(m) > spin) throw InvalidArgument("projector needs |m| <= S");
    Matrix a = Matrix::Zero(dim(spin), dim(spin));
    a(m + spin, m + spin) = 1.0;
    return a;
}

}  // namespace qvbs::spin_ops
