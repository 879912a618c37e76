#include "qvbs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qvbs {

namespace {

void require_level(int spin, int level) {
    if (spin < 1) throw InvalidArgument("spin S must be >= 1");
    if (level < 0 || level > spin) throw InvalidArgument("level l must satisfy 0 <= l <= S");
}

void require_level_block(int spin, int level, int j) {
    require_level(spin, level);
    if (std::abs(j) > level) throw InvalidArgument("block index must satisfy |j| <= l");
}

double sign_of(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double eigenvalue_closed(int spin, int level, Deformation q) {
    require_level(spin, level);
    const double f = q_factorial(spin, q);
    return sign_of(level) * f * f * q_binomial(2 * spin + 1, spin - level, q);
}

Vector edge_eigenvector(int spin, int level, Deformation q) {
    require_level(spin, level);
    const int S = spin, l = level;
    auto f = [q](int n) { return q_factorial(n, q); };
    Vector v(S - l + 1);
    for (int i = 0; i <= S - l; ++i) {
        v(i) = q.pow((l + 1.0) * i) *
               std::sqrt(f(S - l) * f(i + l) * f(S - i) / (f(S) * f(l) * f(S - i - l) * f(i)));
    }
    return v;
}

Intertwiner::Intertwiner(int spin, int shift, Deformation q) : spin_(spin), shift_(shift) {
    if (spin < 1) throw InvalidArgument("spin S must be >= 1");
    if (shift == 0 || std::abs(shift) > spin) throw InvalidArgument("intertwiner needs 1 <= |j| <= S");
    const int S = spin;
    auto qi = [q](int n) { return q_integer(n, q); };
    const int cols = S - std::abs(shift) + 1;
    const int rows = cols + 1;
    m_ = Matrix::Zero(rows, cols);
    if (shift > 0) {
        const int j = shift;
        const double denom = qi(j) * qi(S - j + 1);
        for (int a = 0; a < rows; ++a) {
            if (a < cols) m_(a, a) = q.pow(-a) * std::sqrt(qi(a + j) * qi(S - a - j + 1) / denom);
            if (a >= 1) m_(a, a - 1) = -q.pow(1 - a - j) * std::sqrt(qi(a) * qi(S - a + 1) / denom);
        }
    } else {
        const int j = shift;
        const double denom = qi(-j) * qi(S + j + 1);
        for (int a = 0; a < rows; ++a) {
            if (a < cols) m_(a, a) = q.pow(-a) * std::sqrt(qi(a - j) * qi(S - a + j + 1) / denom);
            if (a >= 1) m_(a, a - 1) = -q.pow(1 - a + j) * std::sqrt(qi(a) * qi(S - a + 1) / denom);
        }
    }
}

Intertwiner intertwiner(int spin, int shift, Deformation q) { return Intertwiner(spin, shift, q); }

Vector eigenvector(int spin, int level, int j, Deformation q) {
    require_level_block(spin, level, j);
    Vector v = edge_eigenvector(spin, level, q);
    if (j >= 0) {
        for (int k = level; k > j; --k) v = Intertwiner(spin, k, q)(v);
    } else {
        for (int k = -level; k < j; ++k) v = Intertwiner(spin, k, q)(v);
    }
    return v;
}

double squared_norm_closed(int spin, int level, int j, Deformation q) {
    require_level_block(spin, level, j);
    const int S = spin, l = level, aj = std::abs(j);
    auto f = [q](int n) { return q_factorial(n, q); };
    return q.pow(S * (aj + 1.0) - l * (l + 1.0)) * f(S + l + 1) * f(l - aj) * f(S - l) * f(aj) /
           (f(S) * f(l + aj) * f(S - aj) * q_integer(2 * l + 1, q));
}

double intertwiner_product_element(int spin, int j, int level, int a, int c, Deformation q) {
    require_level(spin, level);
    const int S = spin, l = level;
    if (j < 0 || j >= l) throw InvalidArgument("intertwiner product needs 0 <= j < l");
    if (a < 0 || a > S - j || c < 0 || c > S - l) throw InvalidArgument("intertwiner product index out of range");
    auto f = [q](int n) { return q_factorial(n, q); };
    const double binom = q_binomial(l - j, a - c, q);
    if (binom == 0.0) return 0.0;
    return sign_of(a - c) * q.pow(double(c) * j - double(a) * l) * binom *
           std::sqrt(f(j) * f(S - l) * f(a) * f(S - c) * f(c + l) * f(S - a - j) /
                     (f(l) * f(S - j) * f(c) * f(S - a) * f(a + j) * f(S - c - l)));
}

SpectralData spectral_data(int spin, Deformation q) {
    if (spin < 1) throw InvalidArgument("spin S must be >= 1");
    SpectralData out{spin, q, {}, {}, {}};
    for (int l = 0; l <= spin; ++l) {
        out.eigenvalues.push_back(eigenvalue_closed(spin, l, q));
        for (int j = -l; j <= l; ++j) {
            out.eigenvectors.emplace(std::pair{l, j}, eigenvector(spin, l, j, q));
            out.squared_norms.emplace(std::pair{l, j}, squared_norm_closed(spin, l, j, q));
        }
    }
    return out;
}

SpectrumReport verify_spectrum(int spin, Deformation q, const SpectrumTolerances& tol) {
    if (spin < 1 || spin > 6) throw InvalidArgument("verify_spectrum supports 1 <= S <= 6");
    const int S = spin;
    SpectrumReport rep;
    rep.spin = S;
    rep.q = q.value();
    rep.degeneracies.assign(static_cast<size_t>(S + 1), 0);
    rep.solver_converged = true;
    rep.min_block_separation = INFINITY;

    for (int l = 0; l <= S; ++l) rep.eigenvalues.push_back(eigenvalue_closed(S, l, q));
    const double lambda0 = std::abs(rep.eigenvalues[0]);

    rep.ordering_ok = true;
    for (int l = 1; l <= S; ++l)
        if (!(std::abs(rep.eigenvalues[l - 1]) > std::abs(rep.eigenvalues[l]))) rep.ordering_ok = false;

    const TransferMatrix g = transfer_matrix(S, q);
    std::vector<Matrix> blocks;
    for (int j = -S; j <= S; ++j) blocks.push_back(block(g, j));
    auto blk = [&](int j) -> const Matrix& { return blocks[static_cast<size_t>(j + S)]; };

    for (int j = -S; j <= S; ++j) {
        const auto eig = linalg::jacobi_eigen(blk(j));
        rep.solver_converged = rep.solver_converged && eig.converged;
        std::vector<double> numeric(eig.values.data(), eig.values.data() + eig.values.size());
        rep.numeric_eigenvalues.insert(rep.numeric_eigenvalues.end(), numeric.begin(), numeric.end());

        // Closed-form levels present in this block, paired by sorted order.
        std::vector<std::pair<double, int>> expected;
        for (int l = std::abs(j); l <= S; ++l) expected.emplace_back(rep.eigenvalues[l], l);
        std::sort(expected.begin(), expected.end());
        for (size_t k = 0; k < expected.size(); ++k) {
            const auto [value, l] = expected[k];
            const double rel = std::abs(numeric[k] - value) / std::abs(value);
            rep.max_eigenvalue_rel_error = std::max(rep.max_eigenvalue_rel_error, rel);
            if (rel <= tol.eigenvalue) ++rep.degeneracies[static_cast<size_t>(l)];
        }
        for (size_t k = 1; k < numeric.size(); ++k)
            rep.min_block_separation = std::min(rep.min_block_separation, (numeric[k] - numeric[k - 1]) / lambda0);

        for (int l = std::abs(j); l <= S; ++l) {
            const Vector v = eigenvector(S, l, j, q);
            const double lam = rep.eigenvalues[l];
            const double res = (blk(j) * v - lam * v).norm() / (std::abs(lam) * v.norm());
            rep.max_eigen_residual = std::max(rep.max_eigen_residual, res);
            rep.max_leading_one_error = std::max(rep.max_leading_one_error, std::abs(v(0) - 1.0));
            const double closed = squared_norm_closed(S, l, j, q);
            rep.max_norm_residual = std::max(rep.max_norm_residual, std::abs(v.squaredNorm() / closed - 1.0));
        }
        if (j != 0) {
            const Intertwiner in(S, j, q);
            const double res = (in.matrix() * blk(j) - blk(in.target()) * in.matrix()).norm() / blk(j).norm();
            rep.max_intertwining_residual = std::max(rep.max_intertwining_residual, res);
        }
    }
    std::sort(rep.numeric_eigenvalues.begin(), rep.numeric_eigenvalues.end());
    if (!std::isfinite(rep.min_block_separation)) rep.min_block_separation = 0.0;

    rep.eigenvalues_match = rep.max_eigenvalue_rel_error <= tol.eigenvalue;
    rep.degeneracy_ok = true;
    for (int l = 0; l <= S; ++l)
        if (rep.degeneracies[static_cast<size_t>(l)] != 2 * l + 1) rep.degeneracy_ok = false;
    // Sanity clustering only; the matching above does not depend on it.
    rep.blocks_simple = rep.min_block_separation > 1e-6;

    auto check = [&rep](bool ok, const std::string& what) {
        if (!ok) rep.failures.push_back(what);
    };
    auto fmt = [](double x) {
        std::ostringstream s;
        s.precision(3);
        s << std::scientific << x;
        return s.str();
    };
    check(rep.eigenvalues_match, "eigenvalue mismatch " + fmt(rep.max_eigenvalue_rel_error));
    check(rep.degeneracy_ok, "degeneracy count differs from 2l+1");
    check(rep.ordering_ok, "|lambda_l| not strictly decreasing");
    check(rep.solver_converged, "jacobi did not converge");
    check(rep.max_eigen_residual <= tol.eigen_residual, "eigenvector residual " + fmt(rep.max_eigen_residual));
    check(rep.max_intertwining_residual <= tol.intertwining,
          "intertwining residual " + fmt(rep.max_intertwining_residual));
    check(rep.max_norm_residual <= tol.norm, "squared norm residual " + fmt(rep.max_norm_residual));
    check(rep.max_leading_one_error <= tol.leading_one, "leading component differs from 1");
    rep.passed = rep.failures.empty();
    return rep;
}

}  // namespace qvbs
