#pragma once

// q-deformed combinatorics and the U_q(su(2)) Clebsch-Gordan coefficient.

#include <stdexcept>
#include <string>

namespace qvbs {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by q_cgc when the total spin violates the triangle rule.
class InvalidSpinTriple : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Real deformation parameter q. Only q > 0 is accepted so that square roots
/// of q-factorial products stay real; q = 1 is the undeformed point.
class Deformation {
public:
    explicit Deformation(double q);

    double value() const noexcept { return q_; }
    Deformation inverse() const { return Deformation(1.0 / q_); }

    /// q^e for a real exponent.
    double pow(double e) const;

private:
    double q_;
};

/// A value in (1/2)Z stored as twice its value.
struct HalfInteger {
    int twice = 0;

    static constexpr HalfInteger integer(int n) noexcept { return {2 * n}; }
    double value() const noexcept { return 0.5 * twice; }
    bool is_integer() const noexcept { return twice % 2 == 0; }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) noexcept { return {a.twice + b.twice}; }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) noexcept { return {a.twice - b.twice}; }
    friend constexpr bool operator==(HalfInteger, HalfInteger) noexcept = default;
};

/// |j; m> label. Constructor enforces |m| <= j and equal parity of 2j, 2m.
class SpinLabel {
public:
    SpinLabel(int twice_j, int twice_m);

    static SpinLabel integer(int j, int m) { return SpinLabel(2 * j, 2 * m); }

    int twice_j() const noexcept { return twice_j_; }
    int twice_m() const noexcept { return twice_m_; }
    HalfInteger j() const noexcept { return {twice_j_}; }
    HalfInteger m() const noexcept { return {twice_m_}; }

private:
    int twice_j_;
    int twice_m_;
};

/// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0.
double q_integer(int n, Deformation q);

/// [n]! = [1][2]...[n]; [0]! = 1.
double q_factorial(int n, Deformation q);

/// Gaussian binomial [n]!/([k]![n-k]!) for 0 <= k <= n, zero for any other k.
double q_binomial(int n, int k, Deformation q);

/// q-Clebsch-Gordan coefficient <s1 m1; s2 m2 | j m>_q.
///
/// Evaluates the closed triple-factor expression with the finite z-sum.
/// Returns 0 when m1 + m2 != m. Throws InvalidSpinTriple when j is outside
/// |s1 - s2| .. s1 + s2 or s1 + s2 + j is not an integer, and InvalidArgument
/// when a projection is out of range or has the wrong parity.
double q_cgc(HalfInteger s1, HalfInteger s2, HalfInteger j,
             HalfInteger m1, HalfInteger m2, HalfInteger m, Deformation q);

double q_cgc(const SpinLabel& first, const SpinLabel& second, const SpinLabel& total, Deformation q);

}  // namespace qvbs
