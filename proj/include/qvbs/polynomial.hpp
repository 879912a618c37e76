#pragma once

// Sparse multivariate polynomial with real coefficients, keyed by exponent
// vectors. Exponents are signed so intermediate Laurent monomials can be
// formed; every polynomial the oracle keeps has nonnegative exponents.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace qvbs {

using Exponents = std::vector<int>;

class Polynomial {
public:
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, double c);
    static Polynomial monomial(Exponents exps, double c);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const std::map<Exponents, double>& terms() const noexcept { return terms_; }

    /// Coefficient of a monomial, 0 when absent.
    double coefficient(const Exponents& e) const;
    double max_abs_coefficient() const;

    void add_term(const Exponents& e, double c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(double s);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, double s) { return a *= s; }

    /// Rebuilds the polynomial term by term: f maps (exponents, coefficient) to
    /// a new exponent vector (modified in place) and a new coefficient.
    Polynomial transform(const std::function<double(Exponents&, double)>& f) const;

    /// Drops coefficients with |c| <= threshold.
    void prune(double threshold);

private:
    void accumulate(const Exponents& e, double c);

    std::size_t num_vars_;
    std::map<Exponents, double> terms_;
};

}  // namespace qvbs
