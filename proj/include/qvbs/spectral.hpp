#pragma once

// Closed-form spectrum of the transfer matrix G.
//
// Each block G^{(j)} has the simple spectrum {lambda_l : |j| <= l <= S}.
// Eigenvectors are kept unnormalized with leading component 1: the edge
// vector |lambda_l>>_{+-l} is explicit, and the remaining ones are obtained by
// transporting it towards j = 0 with the intertwiners I_j.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qvbs/linalg.hpp"
#include "qvbs/mpsrep.hpp"
#include "qvbs/qcore.hpp"

namespace qvbs {

/// lambda_l = (-1)^l ([S]!)^2 [2S+1 choose S-l], 0 <= l <= S.
double eigenvalue_closed(int spin, int level, Deformation q);

/// Components of |lambda_l>>_{+l} (equivalently |lambda_l>>_{-l}) in block
/// coordinates i = 0..S-l.
Vector edge_eigenvector(int spin, int level, Deformation q);

/// Two-diagonal map I_j : W_j -> W_{j - sign(j)}, 1 <= |j| <= S.
class Intertwiner {
public:
    Intertwiner(int spin, int shift, Deformation q);

    int spin() const noexcept { return spin_; }
    int shift() const noexcept { return shift_; }
    int target() const noexcept { return shift_ > 0 ? shift_ - 1 : shift_ + 1; }
    const Matrix& matrix() const noexcept { return m_; }
    Vector operator()(const Vector& v) const { return m_ * v; }

private:
    int spin_;
    int shift_;
    Matrix m_;
};

Intertwiner intertwiner(int spin, int shift, Deformation q);

/// |lambda_l>>_j for |j| <= l <= S, in block coordinates.
Vector eigenvector(int spin, int level, int j, Deformation q);

/// Closed form of _j<<lambda_l|lambda_l>>_j.
double squared_norm_closed(int spin, int level, int j, Deformation q);

/// <<a, a+j| I_{j+1} ... I_l |c, c+l>> in closed form, 0 <= j < l <= S.
double intertwiner_product_element(int spin, int j, int level, int a, int c, Deformation q);

struct SpectralData {
    int spin;
    Deformation q;
    std::vector<double> eigenvalues;                     // index l
    std::map<std::pair<int, int>, Vector> eigenvectors;  // key (l, j)
    std::map<std::pair<int, int>, double> squared_norms; // closed form, key (l, j)
};

SpectralData spectral_data(int spin, Deformation q);

struct SpectrumTolerances {
    double eigenvalue = 1e-9;     // relative, numeric vs closed form
    double eigen_residual = 1e-10;
    double intertwining = 1e-11;
    double norm = 1e-10;
    double leading_one = 1e-12;
};

struct SpectrumReport {
    int spin = 0;
    double q = 1.0;
    std::vector<double> eigenvalues;  // closed form, l = 0..S
    std::vector<int> degeneracies;    // matched blocks per level
    std::vector<double> numeric_eigenvalues;  // all blocks, ascending
    double max_eigenvalue_rel_error = 0.0;
    double max_eigen_residual = 0.0;
    double max_intertwining_residual = 0.0;
    double max_norm_residual = 0.0;
    double max_leading_one_error = 0.0;
    double min_block_separation = 0.0;  // relative to |lambda_0|
    bool eigenvalues_match = false;
    bool degeneracy_ok = false;
    bool blocks_simple = false;
    bool ordering_ok = false;
    bool solver_converged = false;
    bool passed = false;
    std::vector<std::string> failures;
};

/// Numeric cross-check of the closed-form spectrum: cyclic Jacobi on every
/// block G^{(j)}, matched against lambda_l by exact l-bookkeeping, plus
/// residuals of the closed-form eigenvectors, intertwining relation and norms.
/// Mismatches are reported, not thrown. Requires 1 <= S <= 6.
SpectrumReport verify_spectrum(int spin, Deformation q, const SpectrumTolerances& tol = {});

}  // namespace qvbs
