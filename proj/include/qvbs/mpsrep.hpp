#pragma once

// Matrix-product ingredients of the q-VBS state: the site tensor entries
// h_{ii'}, the transfer matrix G on W = span{|a,b>>, 0 <= a,b <= S}, and its
// one-site operator insertions G_A.
//
// W is ordered row-major by (a, b) with a outer: index(a, b) = a*(S+1) + b.
// The block W_j is spanned by |i, i+j>> (j >= 0) or |i-j, i>> (j < 0),
// ordered by increasing i.

#include <string_view>
#include <utility>
#include <vector>

#include "qvbs/linalg.hpp"
#include "qvbs/qcore.hpp"

namespace qvbs {

/// (S+1)x(S+1) matrix of site-tensor coefficients; g(i,i') = h_{ii'} |S; i'-i>.
class HCoefficients {
public:
    HCoefficients(int spin, Deformation q);

    int spin() const noexcept { return spin_; }
    Deformation q() const noexcept { return q_; }
    double operator()(int i, int ip) const { return entries_(i, ip); }
    const Matrix& matrix() const noexcept { return entries_; }

private:
    int spin_;
    Deformation q_;
    Matrix entries_;
};

HCoefficients h_coefficients(int spin, Deformation q);

enum class SiteOperator { Sz, Splus, Sminus };

std::string_view to_string(SiteOperator op);

/// Dense (S+1)^2 matrix over W together with the parameters that built it.
class WMatrix {
public:
    WMatrix(int spin, Deformation q, Matrix m) : spin_(spin), q_(q), m_(std::move(m)) {}
    virtual ~WMatrix() = default;
    WMatrix(const WMatrix&) = default;
    WMatrix& operator=(const WMatrix&) = default;

    int spin() const noexcept { return spin_; }
    Deformation q() const noexcept { return q_; }
    int dimension() const noexcept { return (spin_ + 1) * (spin_ + 1); }
    const Matrix& matrix() const noexcept { return m_; }
    double operator()(int a, int b, int c, int d) const { return m_(index(a, b), index(c, d)); }
    int index(int a, int b) const noexcept { return a * (spin_ + 1) + b; }

private:
    int spin_;
    Deformation q_;
    Matrix m_;
};

/// G_{(a,b;c,d)} = delta_{c-a,d-b} h_{ac} h_{bd}. Symmetric and block diagonal in j = b - a.
class TransferMatrix : public WMatrix {
public:
    using WMatrix::WMatrix;
};

/// G_A for A in {S^z, S^+, S^-}.
class OperatorInsertion : public WMatrix {
public:
    OperatorInsertion(int spin, Deformation q, SiteOperator op, Matrix m)
        : WMatrix(spin, q, std::move(m)), op_(op) {}
    SiteOperator op() const noexcept { return op_; }

private:
    SiteOperator op_;
};

/// T_{abcd} = h_{ac} h_{bd}.
double t_element(const HCoefficients& h, int a, int b, int c, int d);

TransferMatrix transfer_matrix(int spin, Deformation q);

OperatorInsertion operator_insertion(int spin, Deformation q, SiteOperator op);

/// G_A for an arbitrary one-site operator given as a (2S+1)x(2S+1) matrix in
/// the |S;m> basis, rows/columns ordered m = -S..S:
/// (G_A)_{(a,b;c,d)} = h_{ac} h_{bd} <S; c-a | A | S; d-b>.
Matrix site_insertion(int spin, Deformation q, const Matrix& local_operator);

/// Basis pairs (a, b) of W_j in block order.
std::vector<std::pair<int, int>> block_basis(int spin, int j);

/// Restriction of a j-preserving W matrix (G or G_{S^z}) to W_j.
Matrix block(const WMatrix& m, int j);

/// Restriction of an arbitrary W matrix to rows in W_{row_j} and columns in W_{col_j}.
Matrix block(const Matrix& m, int spin, int row_j, int col_j);

/// Embeds a W_j coordinate vector into W.
Vector embed(int spin, int j, const Vector& v);

/// Reassembles a matrix over W from its diagonal blocks G^{(j)}, j = -S..S.
Matrix assemble_blocks(int spin, const std::vector<Matrix>& blocks);

}  // namespace qvbs
