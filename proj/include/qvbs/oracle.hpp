#pragma once

// Brute-force ground truth for the q-VBS chain.
//
// The ground state is materialized twice, independently of the transfer
// matrix: once by expanding the bond product in the Weyl (polynomial)
// representation, once by contracting the site tensors h_{ii'}. The
// projectors pi_J and the Hamiltonian are built from q_cgc.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qvbs/correlators.hpp"
#include "qvbs/linalg.hpp"
#include "qvbs/polynomial.hpp"
#include "qvbs/qcore.hpp"

namespace qvbs {

/// Raised when a chain would exceed the dense-state budget.
class BudgetExceeded : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

inline constexpr long long kMaxStateDimension = 390625;        // 5^8
inline constexpr long long kMaxDenseHamiltonianDimension = 4096;

/// (2S+1)^L, or -1 when it overflows the budget check.
long long state_dimension(int spin, int length);
void require_state_budget(int spin, int length);

/// |Psi> in the Weyl representation. Variables are ordered
/// (x_1, y_1, x_2, y_2, ..., x_L, y_L).
struct PolynomialState {
    int length;
    int spin;
    Polynomial poly;
};

/// Dense chain state over (x)_k |S; m_k>, lexicographic in (m_1, ..., m_L)
/// with m_1 most significant and each m running -S..S.
struct SpinState {
    int length;
    int spin;
    Vector coeffs;

    long long dimension() const { return coeffs.size(); }
    double norm_sq() const { return coeffs.squaredNorm(); }
};

/// prod_k prod_{m=1}^{S} (q^m x_k y_{k+1} - q^{-m} y_k x_{k+1}), periodic.
PolynomialState build_vbs_poly(int spin, Deformation q, int length);

/// x^{S+m} y^{S-m} -> sqrt([S+m]! [S-m]!) |S;m> on every site.
SpinState poly_to_spin_state(const PolynomialState& p, Deformation q);

/// Tr[g_1 * ... * g_L] contracted into the |S;m> basis.
SpinState mps_state(int spin, Deformation q, int length);

struct TwoSiteOperator {
    int spin;
    std::string label;
    Matrix matrix;  // on V_S (x) V_S, index (m1+S)*(2S+1) + (m2+S)
};

/// U_q(su(2)) projector onto V_J inside V_S (x) V_S, 0 <= J <= 2S.
TwoSiteOperator projector(int spin, int total, Deformation q);

/// Positive bond couplings C_J(k, k+1); defaults to 1 everywhere.
class BondCouplings {
public:
    BondCouplings() = default;

    /// C_J(k,k+1) = value for every bond k.
    BondCouplings& set(int total, double value);
    /// C_J(k,k+1) = value on one bond (k is 0-based).
    BondCouplings& set(int total, int bond, double value);

    double operator()(int total, int bond) const;

private:
    std::map<int, double> per_total_;
    std::map<std::pair<int, int>, double> per_bond_;
};

/// Dense H = sum_k sum_{J=S+1}^{2S} C_J(k,k+1) (pi_J)_{k,k+1}, periodic.
/// Limited to (2S+1)^L <= kMaxDenseHamiltonianDimension.
Matrix hamiltonian(int spin, Deformation q, int length, const BondCouplings& c = {});

/// H|psi> without forming H.
SpinState apply_hamiltonian(const SpinState& psi, Deformation q, const BondCouplings& c = {});

/// Applies a two-site operator to sites (bond, bond+1 mod L), 0-based.
SpinState apply_two_site(const SpinState& psi, const Matrix& op, int bond);

/// Applies a one-site operator to a 0-based site.
SpinState apply_one_site(const SpinState& psi, const Matrix& op, int site);

/// Ascending eigenvalues of the dense Hamiltonian.
Vector hamiltonian_spectrum(int spin, Deformation q, int length, const BondCouplings& c = {});

/// <psi|A_1 B_r|psi>/<psi|psi> with 1-based r in 1..L; r = 1 gives A B on site 1.
double expectation_two_point(const SpinState& psi, const Matrix& a, const Matrix& b, int r);

/// <psi|A_site|psi>/<psi|psi>, 1-based site.
double expectation_one_point(const SpinState& psi, const Matrix& a, int site = 1);

/// Direct two-point function in the materialized state.
double oracle_correlator(int spin, Deformation q, int length, int r, PairKind pair);

/// Direct one-point function in the materialized state.
double oracle_one_point(int spin, Deformation q, int length, const OnePointOperator& a);

// --- Lowering operator on two-site polynomials ----------------------------
// Variables are (x_alpha, y_alpha, x_beta, y_beta).

/// v_J = (x_a x_b)^J prod_{nu=1}^{2S-J} (x_a y_b - q^{2(nu-S-1)} x_b y_a).
Polynomial highest_weight_vector(int spin, int total, Deformation q);

/// Delta X^- = X^-_a (x) q^{H_b/2} + q^{-H_a/2} (x) X^-_b, with each
/// (D_q - D_{1/q})/(q - 1/q) taken monomial-wise so q = 1 is regular.
Polynomial apply_lowering(const Polynomial& p, Deformation q);

/// The same operator written as four dilation terms divided by q - 1/q.
/// Requires q != 1.
Polynomial apply_lowering_four_term(const Polynomial& p, Deformation q);

/// Closed form for (Delta X^-)^n v_J.
Polynomial lowered_closed_form(int spin, int total, int n, Deformation q);

struct LoweringReport {
    int spin = 0;
    int total = 0;
    int n = 0;
    double q = 1.0;
    double max_mismatch = 0.0;    // absolute, coefficient-wise
    double scale = 0.0;           // largest intermediate coefficient
    double relative_mismatch = 0.0;
    bool vanishing_checked = false;  // n >= 2J+1
    double vanishing_residual = 0.0; // max |coef| / scale of the iterated result
    bool passed = false;
};

/// Compares n applications of Delta X^- on v_J with the closed form,
/// relative to the largest intermediate coefficient. 0 <= J <= 2S,
/// 0 <= n <= 2J+1, S <= 3.
LoweringReport verify_lowering_closed_form(int spin, int total, int n, Deformation q, double tol = 1e-10);

}  // namespace qvbs
