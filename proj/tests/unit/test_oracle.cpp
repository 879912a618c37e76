#include <cmath>

#include "doctest.h"
#include "qvbs/correlators.hpp"
#include "qvbs/mpsrep.hpp"
#include "qvbs/oracle.hpp"
#include "qvbs/spin_ops.hpp"

using namespace qvbs;

TEST_CASE("vbs polynomial structure") {
    const double qv = 1.6;
    const auto p = build_vbs_poly(1, Deformation(qv), 2);
    // (q x1 y2 - q^-1 y1 x2)(q x2 y1 - q^-1 y2 x1)
    CHECK(p.poly.size() == 3);
    CHECK(p.poly.coefficient({1, 1, 1, 1}) == doctest::Approx(qv * qv + 1 / (qv * qv)));
    CHECK(p.poly.coefficient({2, 0, 0, 2}) == doctest::Approx(-1.0));
    CHECK(p.poly.coefficient({0, 2, 2, 0}) == doctest::Approx(-1.0));
    for (int S = 1; S <= 2; ++S)
        for (int L = 2; L <= 5; ++L) {
            const auto ps = build_vbs_poly(S, Deformation(0.8), L);
            for (const auto& [e, c] : ps.poly.terms())
                for (int k = 0; k < L; ++k) CHECK(e[2 * k] + e[2 * k + 1] == 2 * S);
        }
}

TEST_CASE("dictionary and route agreement") {
    Polynomial single(2);
    single.add_term({2, 0}, 1.0);
    PolynomialState ps{1, 1, single};
    // Length-1 states are not chains; use two sites with x^2 on the first.
    Polynomial two(4);
    two.add_term({2, 0, 0, 2}, 1.0);
    const SpinState s = poly_to_spin_state({2, 1, two}, Deformation(1.5));
    // m = (1, -1) -> index 2*3 + 0
    CHECK(s.coeffs(6) == doctest::Approx(q_integer(2, Deformation(1.5))));

    Polynomial bad(4);
    bad.add_term({1, 0, 0, 2}, 1.0);
    CHECK_THROWS_AS(poly_to_spin_state({2, 1, bad}, Deformation(1.0)), InvalidArgument);

    CHECK(poly_to_spin_state(build_vbs_poly(1, Deformation(1.0), 2), Deformation(1.0)).norm_sq() == doctest::Approx(12.0));

    for (int S = 1; S <= 2; ++S)
        for (int L = 2; L <= 5; ++L)
            for (double qv : {0.5, 1.0, 2.0}) {
                const Deformation q(qv);
                const SpinState a = poly_to_spin_state(build_vbs_poly(S, q, L), q);
                const SpinState b = mps_state(S, q, L);
                CHECK((a.coeffs - b.coeffs).norm() <= 1e-12 * b.coeffs.norm());
                const double tr = norm_sq_finite(S, q, L).value();
                CHECK(std::abs(b.norm_sq() - tr) <= 1e-10 * tr);
            }
}

TEST_CASE("support of the state does not depend on q") {
    const SpinState a = mps_state(2, Deformation(0.5), 4);
    const SpinState b = mps_state(2, Deformation(1.7), 4);
    for (long long i = 0; i < a.dimension(); ++i) CHECK((std::abs(a.coeffs(i)) > 1e-14) == (std::abs(b.coeffs(i)) > 1e-14));
}

TEST_CASE("projector algebra") {
    for (int S = 1; S <= 2; ++S)
        for (double qv : {0.5, 1.0, 2.0}) {
            const Deformation q(qv);
            const int d = (2 * S + 1) * (2 * S + 1);
            Matrix sum = Matrix::Zero(d, d);
            for (int J = 0; J <= 2 * S; ++J) {
                const Matrix p = projector(S, J, q).matrix;
                sum += p;
                CHECK((p * p - p).cwiseAbs().maxCoeff() <= 1e-10);
                CHECK((p - p.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
                CHECK(p.trace() == doctest::Approx(2 * J + 1).epsilon(1e-8));
                for (int Jp = 0; Jp < J; ++Jp) CHECK((p * projector(S, Jp, q).matrix).cwiseAbs().maxCoeff() <= 1e-10);
            }
            CHECK((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-10);
        }
    CHECK_THROWS_AS(projector(1, 3, Deformation(1.0)), InvalidArgument);
}

TEST_CASE("hamiltonian annihilates the ground state") {
    for (int S = 1; S <= 2; ++S)
        for (int L = 3; L <= (S == 1 ? 6 : 5); ++L)
            for (double qv : {0.5, 1.0, 2.0}) {
                const Deformation q(qv);
                const SpinState psi = mps_state(S, q, L);
                const SpinState h = apply_hamiltonian(psi, q);
                CHECK(h.coeffs.norm() <= 1e-10 * psi.coeffs.norm());
            }
    const Deformation one(1.0);
    const Matrix h = hamiltonian(1, one, 4);
    const SpinState psi = mps_state(1, one, 4);
    CHECK((h * psi.coeffs - apply_hamiltonian(psi, one).coeffs).norm() <= 1e-12);
    CHECK((h - h.transpose()).norm() <= 1e-12);
    const Vector ev = hamiltonian_spectrum(1, one, 4);
    CHECK(ev(0) >= -1e-9);
    CHECK(ev(1) > 1e-3);
    for (double qv : {0.5, 2.0}) {
        const Vector e = hamiltonian_spectrum(1, Deformation(qv), 4);
        CHECK(e(0) >= -1e-9);
        CHECK(e(1) > 1e-3);
    }

    BondCouplings c;
    c.set(2, 0.3).set(2, 1, 5.0);
    CHECK(c(2, 0) == 0.3);
    CHECK(c(2, 1) == 5.0);
    CHECK(c(1, 1) == 1.0);
    CHECK(apply_hamiltonian(psi, one, c).coeffs.norm() <= 1e-10 * psi.coeffs.norm());
    CHECK(hamiltonian_spectrum(1, one, 4, c)(0) >= -1e-9);
    CHECK_THROWS_AS(c.set(2, 0.0), InvalidArgument);
    CHECK_THROWS_AS(c.set(2, 1, -1.0), InvalidArgument);
}

TEST_CASE("budget guards") {
    CHECK(state_dimension(2, 8) == 390625);
    CHECK(state_dimension(2, 9) == -1);
    CHECK_THROWS_AS(require_state_budget(2, 12), BudgetExceeded);
    CHECK_THROWS_AS(hamiltonian(2, Deformation(1.0), 6), BudgetExceeded);
    CHECK_THROWS_AS(mps_state(1, Deformation(1.0), 1), InvalidArgument);
}

TEST_CASE("direct expectations match the transfer-matrix formulas") {
    for (double qv : {0.5, 1.0, 2.0}) {
        const Deformation q(qv);
        for (int L = 4; L <= 6; ++L)
            for (int r = 2; r <= L; ++r)
                for (PairKind pair : {PairKind::ZZ, PairKind::PM}) {
                    const double a = oracle_correlator(1, q, L, r, pair);
                    const double b = two_point_finite(1, q, L, r, pair);
                    CHECK(std::abs(a - b) <= 1e-10);
                }
        CHECK(std::abs(oracle_one_point(1, q, 6, OnePointOperator::sz())) <= 1e-12);
        double sz2 = 0.0;
        for (int m = -1; m <= 1; ++m) sz2 += m * m * oracle_one_point(1, q, 6, OnePointOperator::projector(m));
        CHECK(oracle_one_point(1, q, 6, OnePointOperator::sz_squared()) == doctest::Approx(sz2).epsilon(1e-12));
    }
    const SpinState psi = mps_state(1, Deformation(1.0), 5);
    const double zz = expectation_two_point(psi, spin_ops::sz(1), spin_ops::sz(1), 2);
    CHECK(zz == doctest::Approx(-0.4333333333).epsilon(1e-8));
    const double same = expectation_two_point(psi, spin_ops::sz(1), spin_ops::sz(1), 1);
    CHECK(same == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK_THROWS_AS(expectation_two_point(psi, spin_ops::sz(1), spin_ops::sz(1), 6), InvalidArgument);
}

TEST_CASE("lowering operator") {
    for (double qv : {0.5, 0.9, 1.1, 2.0}) {
        const Deformation q(qv);
        for (int S = 1; S <= 2; ++S)
            for (int J = 0; J <= 2 * S; ++J) {
                Polynomial v = highest_weight_vector(S, J, q);
                for (int n = 0; n < 3; ++n) {
                    const Polynomial a = apply_lowering(v, q);
                    const Polynomial b = apply_lowering_four_term(v, q);
                    const double scale = std::max(1.0, a.max_abs_coefficient());
                    CHECK((a - b).max_abs_coefficient() <= 1e-12 * scale);
                    v = a;
                }
            }
    }
    CHECK_THROWS_AS(apply_lowering_four_term(highest_weight_vector(1, 1, Deformation(1.0)), Deformation(1.0)),
                    InvalidArgument);
}

TEST_CASE("lowering operator closed form") {
    const auto r0 = verify_lowering_closed_form(2, 3, 0, Deformation(0.7));
    CHECK(r0.passed);
    CHECK(r0.relative_mismatch == 0.0);
    const auto r = verify_lowering_closed_form(1, 1, 2, Deformation(1.3));
    CHECK(r.passed);
    CHECK(r.relative_mismatch <= 1e-10);
    const auto v = verify_lowering_closed_form(2, 1, 3, Deformation(1.3));
    CHECK(v.vanishing_checked);
    CHECK(v.vanishing_residual <= 1e-10);
    CHECK(v.passed);
    for (double qv : {0.5, 0.9, 1.0, 1.1, 2.0})
        for (int S = 1; S <= 3; ++S)
            for (int J = 0; J <= 2 * S; ++J)
                for (int n = 0; n <= 2 * J + 1; ++n) CHECK(verify_lowering_closed_form(S, J, n, Deformation(qv)).passed);
    CHECK_THROWS_AS(verify_lowering_closed_form(4, 1, 1, Deformation(1.0)), InvalidArgument);
    CHECK_THROWS_AS(verify_lowering_closed_form(1, 1, 4, Deformation(1.0)), InvalidArgument);
}
