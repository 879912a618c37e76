#include "qvbs/mpsrep.hpp"

#include <cmath>
#include <cstdlib>

namespace qvbs {

namespace {

void require_spin(int spin) {
    if (spin < 1) throw InvalidArgument("spin S must be >= 1");
}

void require_block(int spin, int j) {
    if (std::abs(j) > spin) throw InvalidArgument("block index |j| must not exceed S");
}

Matrix build_h(int S, Deformation q) {
    Matrix h(S + 1, S + 1);
    for (int i = 0; i <= S; ++i) {
        for (int ip = 0; ip <= S; ++ip) {
            const double sign = ((S - i) % 2 == 0) ? 1.0 : -1.0;
            const double mag = q.pow((i + ip - S) * (S + 1) / 2.0) *
                               std::sqrt(q_binomial(S, i, q) * q_binomial(S, ip, q) *
                                         q_factorial(S - i + ip, q) * q_factorial(S + i - ip, q));
            h(i, ip) = sign * mag;
        }
    }
    return h;
}

}  // namespace

HCoefficients::HCoefficients(int spin, Deformation q) : spin_(spin), q_(q) {
    require_spin(spin);
    entries_ = build_h(spin, q);
}

HCoefficients h_coefficients(int spin, Deformation q) { return HCoefficients(spin, q); }

std::string_view to_string(SiteOperator op) {
    switch (op) {
        case SiteOperator::Sz: return "Sz";
        case SiteOperator::Splus: return "Splus";
        case SiteOperator::Sminus: return "Sminus";
    }
    return "?";
}

double t_element(const HCoefficients& h, int a, int b, int c, int d) { return h(a, c) * h(b, d); }

TransferMatrix transfer_matrix(int spin, Deformation q) {
    const HCoefficients h(spin, q);
    const int n = spin + 1;
    Matrix g = Matrix::Zero(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (c - a == d - b) g(a * n + b, c * n + d) = t_element(h, a, b, c, d);
    return TransferMatrix(spin, q, std::move(g));
}

OperatorInsertion operator_insertion(int spin, Deformation q, SiteOperator op) {
    const HCoefficients h(spin, q);
    const int S = spin;
    const int n = S + 1;
    Matrix g = Matrix::Zero(n * n, n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    const int k = d - b;  // magnetization of the ket
                    double factor = 0.0;
                    switch (op) {
                        case SiteOperator::Sz:
                            if (c - a == k) factor = k;
                            break;
                        case SiteOperator::Splus:
                            if (c - a == k + 1) factor = std::sqrt(double(S - k) * (S + k + 1));
                            break;
                        case SiteOperator::Sminus:
                            if (c - a == k - 1) factor = std::sqrt(double(S + k) * (S - k + 1));
                            break;
                    }
                    if (factor != 0.0) g(a * n + b, c * n + d) = factor * t_element(h, a, b, c, d);
                }
            }
        }
    }
    return OperatorInsertion(spin, q, op, std::move(g));
}

Matrix site_insertion(int spin, Deformation q, const Matrix& local) {
    const int S = spin;
    const int dim = 2 * S + 1;
    if (local.rows() != dim || local.cols() != dim) throw InvalidArgument("local operator must be (2S+1)x(2S+1)");
    const HCoefficients h(spin, q);
    const int n = S + 1;
    Matrix g = Matrix::Zero(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const double elem = local(c - a + S, d - b + S);
                    if (elem != 0.0) g(a * n + b, c * n + d) = elem * t_element(h, a, b, c, d);
                }
    return g;
}

std::vector<std::pair<int, int>> block_basis(int spin, int j) {
    require_block(spin, j);
    std::vector<std::pair<int, int>> out;
    const int size = spin - std::abs(j) + 1;
    out.reserve(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) {
        if (j >= 0)
            out.emplace_back(i, i + j);
        else
            out.emplace_back(i - j, i);
    }
    return out;
}

Matrix block(const Matrix& m, int spin, int row_j, int col_j) {
    const auto rows = block_basis(spin, row_j);
    const auto cols = block_basis(spin, col_j);
    const int n = spin + 1;
    Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            out(r, c) = m(rows[r].first * n + rows[r].second, cols[c].first * n + cols[c].second);
    return out;
}

Matrix block(const WMatrix& m, int j) {
    require_block(m.spin(), j);
    if (auto* ins = dynamic_cast<const OperatorInsertion*>(&m); ins && ins->op() != SiteOperator::Sz) {
        throw InvalidArgument("only G and G_{S^z} are block diagonal in j");
    }
    return block(m.matrix(), m.spin(), j, j);
}

Vector embed(int spin, int j, const Vector& v) {
    const auto basis = block_basis(spin, j);
    if (v.size() != static_cast<Eigen::Index>(basis.size())) throw InvalidArgument("vector does not match block size");
    const int n = spin + 1;
    Vector w = Vector::Zero(n * n);
    for (size_t i = 0; i < basis.size(); ++i) w(basis[i].first * n + basis[i].second) = v(i);
    return w;
}

Matrix assemble_blocks(int spin, const std::vector<Matrix>& blocks) {
    if (static_cast<int>(blocks.size()) != 2 * spin + 1) throw InvalidArgument("expected 2S+1 blocks");
    const int n = spin + 1;
    Matrix g = Matrix::Zero(n * n, n * n);
    for (int j = -spin; j <= spin; ++j) {
        const auto basis = block_basis(spin, j);
        const Matrix& b = blocks[static_cast<size_t>(j + spin)];
        for (size_t r = 0; r < basis.size(); ++r)
            for (size_t c = 0; c < basis.size(); ++c)
                g(basis[r].first * n + basis[r].second, basis[c].first * n + basis[c].second) = b(r, c);
    }
    return g;
}

}  // namespace qvbs
