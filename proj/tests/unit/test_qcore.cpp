#include <cmath>
#include <random>

#include "doctest.h"
#include "qvbs/qcore.hpp"

using namespace qvbs;

namespace {

HalfInteger I(int n) { return HalfInteger::integer(n); }

double fact(int n) { return std::tgamma(n + 1.0); }

// Classical Racah formula, q = 1.
double classical_cg(int j1, int j2, int j, int m1, int m2) {
    const int m = m1 + m2;
    if (std::abs(m) > j) return 0.0;
    const double pre = std::sqrt((2 * j + 1) * fact(j1 + j2 - j) * fact(j1 - j2 + j) * fact(-j1 + j2 + j) /
                                 fact(j1 + j2 + j + 1)) *
                       std::sqrt(fact(j + m) * fact(j - m) * fact(j1 - m1) * fact(j1 + m1) * fact(j2 - m2) *
                                 fact(j2 + m2));
    double sum = 0.0;
    for (int k = 0; k <= j1 + j2 + j; ++k) {
        const int d[] = {j1 + j2 - j - k, j1 - m1 - k, j2 + m2 - k, j - j2 + m1 + k, j - j1 - m2 + k};
        bool ok = true;
        for (int x : d) ok = ok && x >= 0;
        if (!ok) continue;
        double den = fact(k);
        for (int x : d) den *= fact(x);
        sum += (k % 2 ? -1.0 : 1.0) / den;
    }
    return pre * sum;
}

}  // namespace

TEST_CASE("q_integer examples and symmetry") {
    CHECK(q_integer(0, Deformation(0.3)) == 0.0);
    CHECK(q_integer(3, Deformation(1.0)) == doctest::Approx(3.0));
    CHECK(q_integer(2, Deformation(2.0)) == doctest::Approx(2.5));
    for (double q : {0.25, 0.7, 1.3, 4.0}) {
        for (int n = 1; n <= 12; ++n) {
            const double a = q_integer(n, Deformation(q)), b = q_integer(n, Deformation(1.0 / q));
            CHECK(std::abs(a - b) <= 1e-12 * a);
            if (q != 1.0) {
                const double quotient = (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
                CHECK(a == doctest::Approx(quotient).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("q_factorial and q_binomial examples") {
    CHECK(q_factorial(0, Deformation(0.4)) == 1.0);
    CHECK(q_factorial(3, Deformation(1.0)) == doctest::Approx(6.0));
    CHECK(q_factorial(2, Deformation(2.0)) == doctest::Approx(2.5));
    const Deformation q(1.7);
    CHECK(q_binomial(2, 1, q) == doctest::Approx(1.7 + 1 / 1.7));
    CHECK(q_binomial(3, -1, q) == 0.0);
    CHECK(q_binomial(3, 4, q) == 0.0);
    CHECK(q_binomial(3, 1, Deformation(1.0)) == doctest::Approx(3.0));
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k, q) == doctest::Approx(q_binomial(n, n - k, q)).epsilon(1e-13));
            CHECK(q_binomial(n, k, q) ==
                  doctest::Approx(q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q))).epsilon(1e-12));
        }
}

TEST_CASE("deformation rejects nonpositive q") {
    CHECK_THROWS_AS(Deformation(0.0), InvalidArgument);
    CHECK_THROWS_AS(Deformation(-1.0), InvalidArgument);
    CHECK_THROWS_AS(Deformation(std::nan("")), InvalidArgument);
    CHECK_THROWS_AS(SpinLabel(2, 1), InvalidArgument);
    CHECK_THROWS_AS(SpinLabel(2, 4), InvalidArgument);
}

TEST_CASE("q-Vandermonde summation identity, seeded random") {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> ab(0, 6), nn(0, 8);
    std::uniform_real_distribution<double> lq(std::log(0.25), std::log(4.0));
    for (int trial = 0; trial < 400; ++trial) {
        const int alpha = ab(rng), beta = ab(rng), n = nn(rng);
        const Deformation q(std::exp(lq(rng)));
        double lhs = 0.0;
        for (int k = 0; k <= n; ++k)
            lhs += q_binomial(alpha + n - k, n - k, q) * q_binomial(beta + k, k, q) * q.pow(k * (alpha + beta + 2.0));
        const double rhs = q_binomial(alpha + beta + n + 1, n, q) * q.pow(n * (1.0 + beta));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
}

TEST_CASE("q_cgc examples") {
    for (double qv : {0.5, 1.0, 2.0}) {
        const Deformation q(qv);
        CHECK(q_cgc(I(1), I(1), I(2), I(1), I(1), I(2), q) == doctest::Approx(1.0));
        CHECK(q_cgc(I(1), I(1), I(1), I(1), I(0), I(2 - 1), q) != 0.0);
        CHECK(q_cgc(I(1), I(1), I(2), I(1), I(0), I(2), q) == 0.0);  // m1+m2 != m
    }
    CHECK(q_cgc(SpinLabel::integer(1, 1), SpinLabel::integer(1, -1), SpinLabel::integer(0, 0), Deformation(1.0)) ==
          doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK_THROWS_AS(q_cgc(I(1), I(1), I(3), I(1), I(1), I(2), Deformation(1.0)), InvalidSpinTriple);
}

TEST_CASE("q_cgc at q = 1 equals classical Clebsch-Gordan") {
    const Deformation one(1.0);
    for (int j1 = 0; j1 <= 3; ++j1)
        for (int j2 = 0; j2 <= 3; ++j2)
            for (int j = std::abs(j1 - j2); j <= j1 + j2; ++j)
                for (int m1 = -j1; m1 <= j1; ++m1)
                    for (int m2 = -j2; m2 <= j2; ++m2) {
                        if (std::abs(m1 + m2) > j) continue;
                        const double got = q_cgc(I(j1), I(j2), I(j), I(m1), I(m2), I(m1 + m2), one);
                        CHECK(got == doctest::Approx(classical_cg(j1, j2, j, m1, m2)).epsilon(1e-12));
                    }
}

TEST_CASE("half-integer coupling 1/2 x 1/2 is orthogonal") {
    const HalfInteger h{1};
    for (double qv : {0.5, 1.0, 2.0}) {
        const Deformation q(qv);
        // rows (J, M), columns (m1, m2)
        double c[4][4] = {};
        const int Js[4] = {0, 2, 2, 2}, Ms[4] = {0, 2, 0, -2};
        const int m1s[4] = {1, 1, -1, -1}, m2s[4] = {1, -1, 1, -1};
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k)
                if (m1s[k] + m2s[k] == Ms[r])
                    c[r][k] = q_cgc(h, h, HalfInteger{Js[r]}, HalfInteger{m1s[k]}, HalfInteger{m2s[k]},
                                    HalfInteger{Ms[r]}, q);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                double dot = 0.0;
                for (int k = 0; k < 4; ++k) dot += c[a][k] * c[b][k];
                CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
            }
    }
}
