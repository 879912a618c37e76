#include "qvbs/oracle.hpp"

#include <cmath>
#include <cstdlib>

#include <Eigen/Eigenvalues>

#include "qvbs/mpsrep.hpp"
#include "qvbs/spin_ops.hpp"

namespace qvbs {

namespace {

void require_chain(int spin, int length) {
    if (spin < 1) throw InvalidArgument("spin S must be >= 1");
    if (length < 2) throw InvalidArgument("chain length L must be >= 2");
}

// Stride of a 0-based site in the lexicographic index.
long long site_stride(int spin, int length, int site) {
    long long s = 1;
    for (int k = site + 1; k < length; ++k) s *= 2 * spin + 1;
    return s;
}

}  // namespace

long long state_dimension(int spin, int length) {
    long long dim = 1;
    for (int k = 0; k < length; ++k) {
        dim *= 2 * spin + 1;
        if (dim > kMaxStateDimension) return -1;
    }
    return dim;
}

void require_state_budget(int spin, int length) {
    require_chain(spin, length);
    if (state_dimension(spin, length) < 0) {
        throw BudgetExceeded("chain with S=" + std::to_string(spin) + ", L=" + std::to_string(length) +
                             " exceeds the dense state budget of " + std::to_string(kMaxStateDimension));
    }
}

PolynomialState build_vbs_poly(int spin, Deformation q, int length) {
    require_state_budget(spin, length);
    const std::size_t vars = 2 * static_cast<std::size_t>(length);
    Polynomial psi = Polynomial::constant(vars, 1.0);
    for (int k = 0; k < length; ++k) {
        const int next = (k + 1) % length;
        for (int m = 1; m <= spin; ++m) {
            Exponents xy(vars, 0), yx(vars, 0);
            xy[2 * k] += 1;         // x_k
            xy[2 * next + 1] += 1;  // y_{k+1}
            yx[2 * k + 1] += 1;     // y_k
            yx[2 * next] += 1;      // x_{k+1}
            Polynomial bond(vars);
            bond.add_term(xy, q.pow(m));
            bond.add_term(yx, -q.pow(-m));
            psi = psi * bond;
        }
    }
    psi.prune(0.0);
    return {length, spin, std::move(psi)};
}

SpinState poly_to_spin_state(const PolynomialState& p, Deformation q) {
    require_state_budget(p.spin, p.length);
    const int S = p.spin;
    const int d = 2 * S + 1;
    std::vector<double> site_factor(static_cast<size_t>(d));
    for (int m = -S; m <= S; ++m) site_factor[m + S] = std::sqrt(q_factorial(S + m, q) * q_factorial(S - m, q));

    SpinState out{p.length, S, Vector::Zero(state_dimension(S, p.length))};
    for (const auto& [e, c] : p.poly.terms()) {
        long long idx = 0;
        double f = c;
        for (int k = 0; k < p.length; ++k) {
            const int dx = e[2 * k], dy = e[2 * k + 1];
            if (dx < 0 || dy < 0 || dx + dy != 2 * S) throw InvalidArgument("monomial does not have per-site degree 2S");
            const int m = dx - S;
            idx = idx * d + (m + S);
            f *= site_factor[m + S];
        }
        out.coeffs(idx) += f;
    }
    return out;
}

SpinState mps_state(int spin, Deformation q, int length) {
    require_state_budget(spin, length);
    const HCoefficients h(spin, q);
    const int n = spin + 1;
    const int d = 2 * spin + 1;
    SpinState out{length, spin, Vector::Zero(state_dimension(spin, length))};
    std::vector<int> path(static_cast<size_t>(length), 0);
    while (true) {
        long long idx = 0;
        double c = 1.0;
        for (int k = 0; k < length; ++k) {
            const int i = path[k], ip = path[(k + 1) % length];
            c *= h(i, ip);
            idx = idx * d + (ip - i + spin);
        }
        out.coeffs(idx) += c;
        int k = length - 1;
        while (k >= 0 && ++path[k] == n) path[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

TwoSiteOperator projector(int spin, int total, Deformation q) {
    if (spin < 1) throw InvalidArgument("spin S must be >= 1");
    if (total < 0 || total > 2 * spin) throw InvalidArgument("projector needs 0 <= J <= 2S");
    const int S = spin, d = 2 * S + 1;
    const auto hs = HalfInteger::integer(S);
    const auto hj = HalfInteger::integer(total);
    // cg(m1, m2) = <S m1; S m2 | J m1+m2>
    Matrix cg = Matrix::Zero(d, d);
    for (int m1 = -S; m1 <= S; ++m1)
        for (int m2 = -S; m2 <= S; ++m2)
            if (std::abs(m1 + m2) <= total)
                cg(m1 + S, m2 + S) = q_cgc(hs, hs, hj, HalfInteger::integer(m1), HalfInteger::integer(m2),
                                           HalfInteger::integer(m1 + m2), q);
    Matrix p = Matrix::Zero(d * d, d * d);
    for (int m1 = -S; m1 <= S; ++m1)
        for (int m2 = -S; m2 <= S; ++m2)
            for (int n1 = -S; n1 <= S; ++n1) {
                const int n2 = m1 + m2 - n1;
                if (std::abs(n2) > S) continue;
                p((n1 + S) * d + (n2 + S), (m1 + S) * d + (m2 + S)) = cg(m1 + S, m2 + S) * cg(n1 + S, n2 + S);
            }
    return {S, "pi_" + std::to_string(total), std::move(p)};
}

BondCouplings& BondCouplings::set(int total, double value) {
    if (!(value > 0.0)) throw InvalidArgument("couplings C_J must be positive");
    per_total_[total] = value;
    return *this;
}

BondCouplings& BondCouplings::set(int total, int bond, double value) {
    if (!(value > 0.0)) throw InvalidArgument("couplings C_J must be positive");
    per_bond_[{total, bond}] = value;
    return *this;
}

double BondCouplings::operator()(int total, int bond) const {
    if (auto it = per_bond_.find({total, bond}); it != per_bond_.end()) return it->second;
    if (auto it = per_total_.find(total); it != per_total_.end()) return it->second;
    return 1.0;
}

SpinState apply_two_site(const SpinState& psi, const Matrix& op, int bond) {
    const int L = psi.length, S = psi.spin, d = 2 * S + 1;
    if (op.rows() != d * d || op.cols() != d * d) throw InvalidArgument("two-site operator has the wrong size");
    if (bond < 0 || bond >= L) throw InvalidArgument("bond index out of range");
    const int k1 = bond, k2 = (bond + 1) % L;
    const long long s1 = site_stride(S, L, k1), s2 = site_stride(S, L, k2);
    SpinState out{L, S, Vector::Zero(psi.coeffs.size())};
    for (long long idx = 0; idx < psi.coeffs.size(); ++idx) {
        const double c = psi.coeffs(idx);
        if (c == 0.0) continue;
        const int a = static_cast<int>((idx / s1) % d), b = static_cast<int>((idx / s2) % d);
        const long long base = idx - a * s1 - b * s2;
        const int col = a * d + b;
        for (int ap = 0; ap < d; ++ap)
            for (int bp = 0; bp < d; ++bp) {
                const double m = op(ap * d + bp, col);
                if (m != 0.0) out.coeffs(base + ap * s1 + bp * s2) += m * c;
            }
    }
    return out;
}

SpinState apply_one_site(const SpinState& psi, const Matrix& op, int site) {
    const int L = psi.length, S = psi.spin, d = 2 * S + 1;
    if (op.rows() != d || op.cols() != d) throw InvalidArgument("one-site operator has the wrong size");
    if (site < 0 || site >= L) throw InvalidArgument("site index out of range");
    const long long s = site_stride(S, L, site);
    SpinState out{L, S, Vector::Zero(psi.coeffs.size())};
    for (long long idx = 0; idx < psi.coeffs.size(); ++idx) {
        const double c = psi.coeffs(idx);
        if (c == 0.0) continue;
        const int a = static_cast<int>((idx / s) % d);
        const long long base = idx - a * s;
        for (int ap = 0; ap < d; ++ap)
            if (op(ap, a) != 0.0) out.coeffs(base + ap * s) += op(ap, a) * c;
    }
    return out;
}

SpinState apply_hamiltonian(const SpinState& psi, Deformation q, const BondCouplings& c) {
    const int S = psi.spin;
    std::vector<Matrix> projectors;
    for (int J = S + 1; J <= 2 * S; ++J) projectors.push_back(projector(S, J, q).matrix);
    SpinState out{psi.length, S, Vector::Zero(psi.coeffs.size())};
    for (int k = 0; k < psi.length; ++k) {
        Matrix local = Matrix::Zero(projectors.front().rows(), projectors.front().cols());
        for (int J = S + 1; J <= 2 * S; ++J) local += c(J, k) * projectors[static_cast<size_t>(J - S - 1)];
        out.coeffs += apply_two_site(psi, local, k).coeffs;
    }
    return out;
}

Matrix hamiltonian(int spin, Deformation q, int length, const BondCouplings& c) {
    require_state_budget(spin, length);
    const long long dim = state_dimension(spin, length);
    if (dim > kMaxDenseHamiltonianDimension) {
        throw BudgetExceeded("dense Hamiltonian of dimension " + std::to_string(dim) + " exceeds " +
                             std::to_string(kMaxDenseHamiltonianDimension));
    }
    Matrix h(dim, dim);
    SpinState unit{length, spin, Vector::Zero(dim)};
    for (long long col = 0; col < dim; ++col) {
        unit.coeffs.setZero();
        unit.coeffs(col) = 1.0;
        h.col(col) = apply_hamiltonian(unit, q, c).coeffs;
    }
    return h;
}

Vector hamiltonian_spectrum(int spin, Deformation q, int length, const BondCouplings& c) {
    const Matrix h = hamiltonian(spin, q, length, c);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double expectation_two_point(const SpinState& psi, const Matrix& a, const Matrix& b, int r) {
    if (r < 1 || r > psi.length) throw InvalidArgument("two-point site r must satisfy 1 <= r <= L");
    const SpinState bpsi = apply_one_site(psi, b, r - 1);
    const SpinState abpsi = apply_one_site(bpsi, a, 0);
    return psi.coeffs.dot(abpsi.coeffs) / psi.norm_sq();
}

double expectation_one_point(const SpinState& psi, const Matrix& a, int site) {
    if (site < 1 || site > psi.length) throw InvalidArgument("site must satisfy 1 <= site <= L");
    return psi.coeffs.dot(apply_one_site(psi, a, site - 1).coeffs) / psi.norm_sq();
}

double oracle_correlator(int spin, Deformation q, int length, int r, PairKind pair) {
    const SpinState psi = poly_to_spin_state(build_vbs_poly(spin, q, length), q);
    if (pair == PairKind::ZZ) return expectation_two_point(psi, spin_ops::sz(spin), spin_ops::sz(spin), r);
    return expectation_two_point(psi, spin_ops::splus(spin), spin_ops::sminus(spin), r);
}

double oracle_one_point(int spin, Deformation q, int length, const OnePointOperator& a) {
    const SpinState psi = poly_to_spin_state(build_vbs_poly(spin, q, length), q);
    switch (a.kind) {
        case OnePointOperator::Kind::Sz:
            return expectation_one_point(psi, spin_ops::sz(spin));
        case OnePointOperator::Kind::Projector:
            return expectation_one_point(psi, spin_ops::projector(spin, a.m));
        case OnePointOperator::Kind::SzSquared: {
            const Matrix sz = spin_ops::sz(spin);
            return expectation_one_point(psi, sz * sz);
        }
    }
    throw InvalidArgument("unknown one-point operator");
}

// --- lowering operator ------------------------------------------------------

namespace {

enum Var : std::size_t { XA = 0, YA = 1, XB = 2, YB = 3 };

// D_p on one variable: coefficient times p^{degree}.
Polynomial dilate(const Polynomial& p, Var v, double factor) {
    return p.transform([v, factor](Exponents& e, double c) { return c * std::pow(factor, e[v]); });
}

// (D_q - D_{1/q}) / (q - 1/q) on one variable: coefficient times [degree].
Polynomial q_difference(const Polynomial& p, Var v, Deformation q) {
    return p.transform([v, q](Exponents& e, double c) { return e[v] > 0 ? c * q_integer(e[v], q) : 0.0; });
}

// Multiplication by to/from.
Polynomial shift(const Polynomial& p, Var from, Var to) {
    return p.transform([from, to](Exponents& e, double c) {
        --e[from];
        ++e[to];
        return c;
    });
}

Polynomial bond_product(int spin, int total, Deformation q) {
    Polynomial prod = Polynomial::constant(4, 1.0);
    for (int nu = 1; nu <= 2 * spin - total; ++nu) {
        Polynomial f(4);
        f.add_term({1, 0, 0, 1}, 1.0);                                // x_a y_b
        f.add_term({0, 1, 1, 0}, -q.pow(2.0 * (nu - spin - 1)));      // x_b y_a
        prod = prod * f;
    }
    return prod;
}

void require_two_site(int spin, int total) {
    if (spin < 1) throw InvalidArgument("spin S must be >= 1");
    if (total < 0 || total > 2 * spin) throw InvalidArgument("need 0 <= J <= 2S");
}

}  // namespace

Polynomial highest_weight_vector(int spin, int total, Deformation q) {
    require_two_site(spin, total);
    return Polynomial::monomial({total, 0, total, 0}, 1.0) * bond_product(spin, total, q);
}

Polynomial apply_lowering(const Polynomial& p, Deformation q) {
    if (p.num_vars() != 4) throw InvalidArgument("lowering acts on two-site polynomials");
    const double rq = std::sqrt(q.value());
    Polynomial left = shift(q_difference(dilate(dilate(p, XB, rq), YB, 1.0 / rq), XA, q), XA, YA);
    Polynomial right = shift(q_difference(dilate(dilate(p, XA, 1.0 / rq), YA, rq), XB, q), XB, YB);
    left += right;
    left.prune(0.0);
    return left;
}

Polynomial apply_lowering_four_term(const Polynomial& p, Deformation q) {
    if (p.num_vars() != 4) throw InvalidArgument("lowering acts on two-site polynomials");
    const double x = q.value();
    if (x == 1.0) throw InvalidArgument("four-term form is singular at q = 1");
    const double rq = std::sqrt(x);
    const Polynomial beta_half = dilate(dilate(p, XB, rq), YB, 1.0 / rq);
    const Polynomial alpha_half = dilate(dilate(p, XA, 1.0 / rq), YA, rq);
    Polynomial out = shift(dilate(beta_half, XA, x), XA, YA);
    out -= shift(dilate(beta_half, XA, 1.0 / x), XA, YA);
    out += shift(dilate(alpha_half, XB, x), XB, YB);
    out -= shift(dilate(alpha_half, XB, 1.0 / x), XB, YB);
    out *= 1.0 / (x - 1.0 / x);
    out.prune(0.0);
    return out;
}

Polynomial lowered_closed_form(int spin, int total, int n, Deformation q) {
    require_two_site(spin, total);
    if (n < 0) throw InvalidArgument("need n >= 0");
    const int S = spin, J = total;
    Polynomial sum(4);
    for (int mu = 0; mu <= n; ++mu) {
        const double c = q.pow(-2.0 * mu * S) * q_binomial(J, mu, q) * q_binomial(J, n - mu, q);
        if (c == 0.0) continue;
        // (x_a x_b)^{J-n} (x_a y_b)^mu (x_b y_a)^{n-mu}
        sum.add_term({J - n + mu, n - mu, J - mu, mu}, c);
    }
    Polynomial out = sum * bond_product(S, J, q);
    out *= q.pow(double(n) * S) * q_factorial(n, q);
    out.prune(0.0);
    return out;
}

LoweringReport verify_lowering_closed_form(int spin, int total, int n, Deformation q, double tol) {
    require_two_site(spin, total);
    if (spin > 3) throw InvalidArgument("verify_lowering_closed_form supports S <= 3");
    if (n < 0 || n > 2 * total + 1) throw InvalidArgument("need 0 <= n <= 2J+1");
    LoweringReport rep;
    rep.spin = spin;
    rep.total = total;
    rep.n = n;
    rep.q = q.value();

    Polynomial lhs = highest_weight_vector(spin, total, q);
    double scale = lhs.max_abs_coefficient();
    for (int k = 0; k < n; ++k) {
        lhs = apply_lowering(lhs, q);
        scale = std::max(scale, lhs.max_abs_coefficient());
    }
    const Polynomial rhs = lowered_closed_form(spin, total, n, q);
    scale = std::max(scale, rhs.max_abs_coefficient());

    const Polynomial diff = lhs - rhs;
    rep.max_mismatch = diff.max_abs_coefficient();
    rep.scale = scale;
    rep.relative_mismatch = scale > 0.0 ? rep.max_mismatch / scale : rep.max_mismatch;
    rep.passed = rep.relative_mismatch <= tol;
    if (n >= 2 * total + 1) {
        rep.vanishing_checked = true;
        rep.vanishing_residual = scale > 0.0 ? lhs.max_abs_coefficient() / scale : lhs.max_abs_coefficient();
        rep.passed = rep.passed && rep.vanishing_residual <= tol;
    }
    return rep;
}

}  // namespace qvbs
