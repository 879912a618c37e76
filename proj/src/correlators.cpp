#include "qvbs/correlators.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qvbs/spectral.hpp"
#include "qvbs/spin_ops.hpp"

namespace qvbs {

namespace {

void require_spin(int spin) {
    if (spin < 1) throw InvalidArgument("spin S must be >= 1");
}

void require_length(int length) {
    if (length < 2) throw InvalidArgument("chain length L must be >= 2");
}

Matrix pair_left(int spin, Deformation q, PairKind pair) {
    return operator_insertion(spin, q, pair == PairKind::ZZ ? SiteOperator::Sz : SiteOperator::Splus).matrix();
}

Matrix pair_right(int spin, Deformation q, PairKind pair) {
    return operator_insertion(spin, q, pair == PairKind::ZZ ? SiteOperator::Sz : SiteOperator::Sminus).matrix();
}

}  // namespace

double ScaledValue::value() const { return mantissa * std::exp(log_scale); }

double ScaledValue::log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }

std::string_view to_string(PairKind p) { return p == PairKind::ZZ ? "zz" : "pm"; }

PairKind parse_pair(std::string_view s) {
    if (s == "zz") return PairKind::ZZ;
    if (s == "pm") return PairKind::PM;
    throw InvalidArgument("unknown pair '" + std::string(s) + "', expected zz or pm");
}

Matrix one_point_insertion(int spin, Deformation q, const OnePointOperator& a) {
    require_spin(spin);
    switch (a.kind) {
        case OnePointOperator::Kind::Sz:
            return operator_insertion(spin, q, SiteOperator::Sz).matrix();
        case OnePointOperator::Kind::Projector:
            return site_insertion(spin, q, spin_ops::projector(spin, a.m));
        case OnePointOperator::Kind::SzSquared: {
            Matrix sum = Matrix::Zero((spin + 1) * (spin + 1), (spin + 1) * (spin + 1));
            for (int m = -spin; m <= spin; ++m)
                if (m != 0) sum += double(m) * m * site_insertion(spin, q, spin_ops::projector(spin, m));
            return sum;
        }
    }
    throw InvalidArgument("unknown one-point operator");
}

ScaledValue norm_sq_finite(int spin, Deformation q, int length) {
    require_spin(spin);
    require_length(length);
    const double lambda0 = eigenvalue_closed(spin, 0, q);
    const Matrix gn = transfer_matrix(spin, q).matrix() / lambda0;
    return {linalg::matrix_power(gn, length).trace(), length * std::log(lambda0)};
}

double one_point_finite(int spin, Deformation q, int length, const OnePointOperator& a) {
    require_spin(spin);
    require_length(length);
    const double lambda0 = eigenvalue_closed(spin, 0, q);
    const Matrix gn = transfer_matrix(spin, q).matrix() / lambda0;
    const Matrix ga = one_point_insertion(spin, q, a) / lambda0;
    const Matrix p = linalg::matrix_power(gn, length - 1);
    return (ga * p).trace() / (gn * p).trace();
}

double one_point_thermo(int spin, Deformation q, const OnePointOperator& a) {
    require_spin(spin);
    const Vector v0 = embed(spin, 0, eigenvector(spin, 0, 0, q));
    const double lambda0 = eigenvalue_closed(spin, 0, q);
    const double elem = v0.dot(one_point_insertion(spin, q, a) * v0);
    return elem / (lambda0 * squared_norm_closed(spin, 0, 0, q));
}

double prob_sz(int spin, Deformation q, int m) {
    require_spin(spin);
    const int S = spin;
    if (std::abs(m) > S) throw InvalidArgument("prob_sz needs |m| <= S");
    double sum = 0.0;
    for (int i = 0; i <= S; ++i)
        sum += q.pow((S + 2.0) * (2 * i - m - S)) * q_binomial(S, i - m, q) * q_binomial(S, i, q);
    return q_factorial(S + m, q) * q_factorial(S - m, q) / q_factorial(2 * S + 1, q) * sum;
}

double two_point_finite(int spin, Deformation q, int length, int r, PairKind pair) {
    require_spin(spin);
    require_length(length);
    if (r < 2 || r > length) throw InvalidArgument("two-point function needs 2 <= r <= L");
    const double lambda0 = eigenvalue_closed(spin, 0, q);
    const Matrix gn = transfer_matrix(spin, q).matrix() / lambda0;
    const Matrix ga = pair_left(spin, q, pair) / lambda0;
    const Matrix gb = pair_right(spin, q, pair) / lambda0;
    const Matrix numer = ga * linalg::matrix_power(gn, r - 2) * gb * linalg::matrix_power(gn, length - r);
    return numer.trace() / linalg::matrix_power(gn, length).trace();
}

double two_point_thermo(int spin, Deformation q, int r, PairKind pair) {
    require_spin(spin);
    if (r < 2) throw InvalidArgument("two-point function needs r >= 2");
    const int S = spin;
    const double lambda0 = eigenvalue_closed(S, 0, q);
    const Matrix ga = pair_left(S, q, pair) / lambda0;
    const Matrix gb = pair_right(S, q, pair) / lambda0;
    const Vector v0 = embed(S, 0, eigenvector(S, 0, 0, q));
    const double n0 = squared_norm_closed(S, 0, 0, q);
    const Vector left = ga.transpose() * v0;  // <<lambda_0| G_A
    const Vector right = gb * v0;             // G_B |lambda_0>>

    double total = 0.0;
    for (int l = 0; l <= S; ++l) {
        const double weight = std::pow(eigenvalue_closed(S, l, q) / lambda0, r - 2);
        for (int j = -l; j <= l; ++j) {
            const Vector v = embed(S, j, eigenvector(S, l, j, q));
            const double a = left.dot(v);
            const double b = v.dot(right);
            if (a == 0.0 || b == 0.0) continue;
            total += weight * a * b / (n0 * squared_norm_closed(S, l, j, q));
        }
    }
    return total;
}

double matrix_element_zz(int spin, Deformation q) {
    require_spin(spin);
    const int S = spin;
    // The printed brace {q^{S+1} + q^{-S-1} - (q + q^{-1}) q^{2i'-S}} divided by
    // q^S - q^{-S} equals q^{i'} (q [S-i'] - q^{-S-1} [i']) / [S], which stays
    // finite at q = 1.
    const double qs = q_integer(S, q);
    double sum = 0.0;
    for (int i = 0; i <= S; ++i) {
        for (int ip = 0; ip <= S; ++ip) {
            if (i == ip) continue;
            const double brace =
                q.pow(ip) * (q.value() * q_integer(S - ip, q) - q.pow(-S - 1.0) * q_integer(ip, q)) / qs;
            sum += (i - ip) * q.pow((S + 2.0) * (i + ip)) * brace * q_factorial(S + i - ip, q) *
                   q_factorial(S + ip - i, q) * q_binomial(S, i, q) * q_binomial(S, ip, q);
        }
    }
    return q.pow(-double(S) * S - S - 1.0) * sum;
}

double matrix_element_pm(int spin, Deformation q) {
    require_spin(spin);
    const int S = spin;
    auto qi = [q](int n) { return q_integer(n, q); };
    double sum = 0.0;
    for (int i = 0; i <= S; ++i) {
        for (int ip = 0; ip <= S - 1; ++ip) {
            const int u = S + i - ip;      // >= 1
            const int w = S - i + ip + 1;  // >= 1
            sum += q.pow((S + 2.0) * i + (S + 3.0) * ip) *
                   std::sqrt(q_binomial(S, ip + 1, q) * q_binomial(S, ip, q)) *
                   std::sqrt(double(u) * qi(u) * double(w) * qi(w)) *
                   std::sqrt(qi(ip + 1) * qi(S - ip) / qi(S)) * q_factorial(S + ip - i, q) *
                   q_factorial(S + i - ip - 1, q) * q_binomial(S, i, q);
        }
    }
    return -q.pow(-double(S) * S - S / 2.0 + 0.5) * sum;
}

double zz_asymptotic(int spin, Deformation q, int r) {
    const auto res = asymptotic(spin, q, PairKind::ZZ);
    if (r < 2) throw InvalidArgument("asymptotic form needs r >= 2");
    return res.amplitude * std::pow(res.ratio, r);
}

double pm_asymptotic(int spin, Deformation q, int r) {
    const auto res = asymptotic(spin, q, PairKind::PM);
    if (r < 2) throw InvalidArgument("asymptotic form needs r >= 2");
    return res.amplitude * std::pow(res.ratio, r);
}

double correlation_length(int spin, Deformation q) {
    require_spin(spin);
    return 1.0 / std::log(q_integer(spin + 2, q) / q_integer(spin, q));
}

AsymptoticResult asymptotic(int spin, Deformation q, PairKind pair) {
    require_spin(spin);
    const int S = spin;
    auto qi = [q](int n) { return q_integer(n, q); };
    const double f = q_factorial(2 * S + 1, q);
    AsymptoticResult res;
    if (pair == PairKind::ZZ) {
        const double m = matrix_element_zz(S, q);
        res.amplitude = -(qi(3) * qi(S + 2) / (q.pow(2.0 * S - 2.0) * qi(S) * f * f)) * m * m;
    } else {
        const double m = matrix_element_pm(S, q);
        res.amplitude = -(qi(2) * qi(3) * qi(S + 2) / (q.pow(3.0 * S - 2.0) * (f * qi(S)) * (f * qi(S)))) * m * m;
    }
    res.ratio = -qi(S) / qi(S + 2);
    res.correlation_length = correlation_length(S, q);
    if (S >= 2) {
        // First r where the l >= 2 terms stay below 1e-6 of the l = 1 term, measured
        // against the full spectral sum. The contamination shrinks like
        // ([S-1]/[S+3])^r, so two consecutive passes end the search.
        auto contamination = [&](int r) {
            const double asym = res.amplitude * std::pow(res.ratio, r);
            return std::abs(two_point_thermo(S, q, r, pair) / asym - 1.0);
        };
        int r = 2;
        while (r < kMaxValidityRadius && !(contamination(r) <= 1e-6 && contamination(r + 1) <= 1e-6)) ++r;
        res.validity_radius = r;
    }
    return res;
}

}  // namespace qvbs
