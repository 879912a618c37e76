#include "qvbs/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qvbs {

Deformation::Deformation(double q) : q_(q) {
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw InvalidArgument("deformation parameter q must be finite and > 0, got " + std::to_string(q));
    }
}

double Deformation::pow(double e) const { return std::pow(q_, e); }

SpinLabel::SpinLabel(int twice_j, int twice_m) : twice_j_(twice_j), twice_m_(twice_m) {
    if (twice_j < 0) throw InvalidArgument("spin must be nonnegative");
    if (std::abs(twice_m) > twice_j) throw InvalidArgument("|m| exceeds j");
    if ((twice_j - twice_m) % 2 != 0) throw InvalidArgument("j and m must have equal parity");
}

double q_integer(int n, Deformation q) {
    if (n < 0) throw InvalidArgument("q_integer requires n >= 0");
    // Symmetric power sum, paired from the outside in so the result is exactly
    // palindromic under q -> 1/q.
    const double x = q.value();
    double sum = 0.0;
    for (int k = 0; k < n / 2; ++k) {
        const int e = n - 1 - 2 * k;
        sum += std::pow(x, e) + std::pow(x, -e);
    }
    if (n % 2 == 1) sum += 1.0;
    return sum;
}

double q_factorial(int n, Deformation q) {
    if (n < 0) throw InvalidArgument("q_factorial requires n >= 0");
    double result = 1.0;
    for (int i = 2; i <= n; ++i) result *= q_integer(i, q);
    return result;
}

double q_binomial(int n, int k, Deformation q) {
    if (n < 0) throw InvalidArgument("q_binomial requires n >= 0");
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (int i = 1; i <= k; ++i) result *= q_integer(n - k + i, q) / q_integer(i, q);
    return result;
}

namespace {

// Integer-valued half-integer expression; the caller guarantees integrality.
int as_int(HalfInteger h) { return h.twice / 2; }

void check_projection(HalfInteger spin, HalfInteger proj, const char* name) {
    if (spin.twice < 0) throw InvalidArgument(std::string("negative spin ") + name);
    if (std::abs(proj.twice) > spin.twice) throw InvalidArgument(std::string("projection out of range for ") + name);
    if ((spin.twice - proj.twice) % 2 != 0) throw InvalidArgument(std::string("parity mismatch for ") + name);
}

}  // namespace

double q_cgc(HalfInteger s1, HalfInteger s2, HalfInteger j,
             HalfInteger m1, HalfInteger m2, HalfInteger m, Deformation q) {
    check_projection(s1, m1, "s1");
    check_projection(s2, m2, "s2");
    check_projection(j, m, "j");
    if (j.twice < std::abs(s1.twice - s2.twice) || j.twice > s1.twice + s2.twice ||
        (s1.twice + s2.twice + j.twice) % 2 != 0) {
        throw InvalidSpinTriple("spin triple violates the triangle rule");
    }
    if (m1 + m2 != m) return 0.0;

    auto fact = [q](HalfInteger h) { return q_factorial(as_int(h), q); };

    const double S1 = s1.value(), S2 = s2.value(), J = j.value();
    const double M1 = m1.value(), M2 = m2.value(), M = m.value();

    const double sign = (as_int(s1 - m1) % 2 == 0) ? 1.0 : -1.0;
    const double power = M1 * (M1 + M2 + 1.0) + (S2 * (S2 + 1.0) - S1 * (S1 + 1.0) - J * (J + 1.0)) / 2.0;

    const double numer = fact(j + m) * fact(j - m) * fact(s1 - m1) * fact(s2 - m2) * fact(s1 + s2 - j) *
                         q_integer(as_int(j + j) + 1, q);
    const double denom = fact(s1 + m1) * fact(s2 + m2) * fact(s1 - s2 + j) * fact(s2 - s1 + j) *
                         q_factorial(as_int(s1 + s2 + j) + 1, q);

    // Bounds as printed; the -S1-m1 entry of the lower bound is never positive.
    const int z_lo = std::max({0, as_int(HalfInteger{0} - s1 - m1), as_int(j - s2 - m1)});
    const int z_hi = std::min({as_int(j - m), as_int(s1 - m1), as_int(s2 + j - m1)});

    double sum = 0.0;
    for (int z = z_lo; z <= z_hi; ++z) {
        const HalfInteger hz = HalfInteger::integer(z);
        const double term = q.pow(z * (M + J + 1.0)) * fact(s1 + m1 + hz) * fact(s2 + j - m1 - hz) /
                            (q_factorial(z, q) * fact(j - m - hz) * fact(s1 - m1 - hz) * fact(s2 - j + m1 + hz));
        sum += (z % 2 == 0) ? term : -term;
    }
    return sign * q.pow(power) * std::sqrt(numer / denom) * sum;
}

double q_cgc(const SpinLabel& first, const SpinLabel& second, const SpinLabel& total, Deformation q) {
    return q_cgc(first.j(), second.j(), total.j(), first.m(), second.m(), total.m(), q);
}

}  // namespace qvbs
