#include <cmath>

#include "doctest.h"
#include "qvbs/mpsrep.hpp"
#include "qvbs/spin_ops.hpp"

using namespace qvbs;

namespace {
const double kQs[] = {0.3, 0.7, 1.0, 1.5, 3.0};
}

TEST_CASE("h coefficients at S = 1") {
    for (double qv : {0.5, 1.0, 2.0}) {
        const Deformation q(qv);
        const HCoefficients h(1, q);
        const double s2 = std::sqrt(qv + 1 / qv);
        CHECK(h(0, 0) == doctest::Approx(-1 / qv));
        CHECK(h(0, 1) == doctest::Approx(-s2));
        CHECK(h(1, 0) == doctest::Approx(s2));
        CHECK(h(1, 1) == doctest::Approx(qv));
    }
    CHECK(std::abs(h_coefficients(1, Deformation(1.0))(0, 1)) == doctest::Approx(std::sqrt(2.0)));
    for (int S = 1; S <= 4; ++S) {
        const HCoefficients h(S, Deformation(0.7));
        for (int i = 0; i <= S; ++i)
            for (int ip = 0; ip <= S; ++ip) CHECK((h(i, ip) > 0) == ((S - i) % 2 == 0));
    }
    CHECK_THROWS_AS(HCoefficients(0, Deformation(1.0)), InvalidArgument);
}

TEST_CASE("transfer matrix blocks at S = 1") {
    for (double qv : {0.5, 1.0, 2.0}) {
        const auto g = transfer_matrix(1, Deformation(qv));
        const Matrix b0 = block(g, 0);
        REQUIRE(b0.rows() == 2);
        CHECK(b0(0, 0) == doctest::Approx(1 / (qv * qv)));
        CHECK(b0(0, 1) == doctest::Approx(qv + 1 / qv));
        CHECK(b0(1, 0) == doctest::Approx(qv + 1 / qv));
        CHECK(b0(1, 1) == doctest::Approx(qv * qv));
        CHECK(block(g, 1)(0, 0) == doctest::Approx(-1.0));
        CHECK(block(g, -1)(0, 0) == doctest::Approx(-1.0));
    }
    CHECK(transfer_matrix(1, Deformation(1.0)).matrix().trace() == doctest::Approx(0.0));
    CHECK(block(transfer_matrix(2, Deformation(1.3)), 2).rows() == 1);
    CHECK_THROWS_AS(block(transfer_matrix(1, Deformation(1.0)), 2), InvalidArgument);
}

TEST_CASE("G is symmetric, block diagonal and matches the closed element formula") {
    for (int S = 1; S <= 4; ++S)
        for (double qv : kQs) {
            const Deformation q(qv);
            const auto g = transfer_matrix(S, q);
            const Matrix& m = g.matrix();
            CHECK((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-13 * m.cwiseAbs().maxCoeff());

            std::vector<Matrix> blocks;
            for (int j = -S; j <= S; ++j) blocks.push_back(block(g, j));
            CHECK((assemble_blocks(S, blocks) - m).cwiseAbs().maxCoeff() == 0.0);

            for (int j = -S; j <= S; ++j) {
                if (j < 0) continue;
                const Matrix b = block(g, j);
                for (int a = 0; a + j <= S; ++a)
                    for (int c = 0; c + j <= S; ++c) {
                        const double expect = (j % 2 ? -1.0 : 1.0) * q.pow((a + c + j - S) * (S + 1.0)) *
                                              q_factorial(S - a + c, q) * q_factorial(S + a - c, q) *
                                              std::sqrt(q_binomial(S, a, q) * q_binomial(S, a + j, q) *
                                                        q_binomial(S, c, q) * q_binomial(S, c + j, q));
                        CHECK(std::abs(b(a, c) - expect) <= 1e-12 * std::abs(expect));
                    }
            }
        }
}

TEST_CASE("operator insertions") {
    const double qv = 1.4;
    const auto sz = operator_insertion(1, Deformation(qv), SiteOperator::Sz);
    const Matrix b = block(sz, 0);
    CHECK(b(0, 0) == 0.0);
    CHECK(b(1, 1) == 0.0);
    CHECK(b(0, 1) == doctest::Approx(qv + 1 / qv));
    CHECK(b(1, 0) == doctest::Approx(-(qv + 1 / qv)));
    for (int S = 1; S <= 3; ++S) CHECK(operator_insertion(S, Deformation(0.6), SiteOperator::Sz).matrix().diagonal().cwiseAbs().maxCoeff() == 0.0);

    const auto sp = operator_insertion(1, Deformation(1.0), SiteOperator::Splus);
    CHECK(sp(0, 0, 1, 0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(block(sp, 0), InvalidArgument);

    for (int S = 1; S <= 4; ++S)
        for (double qv2 : kQs) {
            const Deformation q(qv2);
            const int n = S + 1;
            const Matrix p = operator_insertion(S, q, SiteOperator::Splus).matrix();
            const Matrix m = operator_insertion(S, q, SiteOperator::Sminus).matrix();
            // G_{S-} = -G_{S+}^T; the sign comes from h_{ac} h_{bd} under (a,b) <-> (c,d).
            CHECK((m + p.transpose()).cwiseAbs().maxCoeff() <= 1e-13 * p.cwiseAbs().maxCoeff());
            for (int a = 0; a < n; ++a)
                for (int bb = 0; bb < n; ++bb)
                    for (int c = 0; c < n; ++c)
                        for (int d = 0; d < n; ++d) {
                            if (p(a * n + bb, c * n + d) != 0.0) CHECK(c - a == d - bb + 1);
                            if (m(a * n + bb, c * n + d) != 0.0) CHECK(c - a == d - bb - 1);
                        }
        }
}

TEST_CASE("site insertion reproduces named insertions") {
    for (int S = 1; S <= 3; ++S) {
        const Deformation q(0.8);
        CHECK((site_insertion(S, q, spin_ops::sz(S)) - operator_insertion(S, q, SiteOperator::Sz).matrix()).norm() <= 1e-12);
        CHECK((site_insertion(S, q, spin_ops::splus(S)) - operator_insertion(S, q, SiteOperator::Splus).matrix()).norm() <= 1e-12);
        Matrix sum = Matrix::Zero((S + 1) * (S + 1), (S + 1) * (S + 1));
        for (int m = -S; m <= S; ++m) sum += site_insertion(S, q, spin_ops::projector(S, m));
        CHECK((sum - transfer_matrix(S, q).matrix()).norm() <= 1e-12 * sum.norm());
    }
}

TEST_CASE("block bases") {
    const auto b = block_basis(2, -1);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == std::pair{1, 0});
    CHECK(b[1] == std::pair{2, 1});
    const Vector v = Vector::LinSpaced(2, 1.0, 2.0);
    const Vector w = embed(2, -1, v);
    CHECK(w(1 * 3 + 0) == 1.0);
    CHECK(w(2 * 3 + 1) == 2.0);
    CHECK(w.sum() == 3.0);
}
