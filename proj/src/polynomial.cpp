#include "qvbs/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "qvbs/qcore.hpp"

namespace qvbs {

Polynomial Polynomial::constant(std::size_t num_vars, double c) {
    Polynomial p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::monomial(Exponents exps, double c) {
    Polynomial p(exps.size());
    p.add_term(exps, c);
    return p;
}

// Exact cancellations remove the monomial.
void Polynomial::accumulate(const Exponents& e, double c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
}

double Polynomial::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

void Polynomial::add_term(const Exponents& e, double c) {
    if (e.size() != num_vars_) throw InvalidArgument("monomial has the wrong number of variables");
    if (c == 0.0) return;
    accumulate(e, c);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.num_vars_ != num_vars_) throw InvalidArgument("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_) accumulate(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.num_vars_ != num_vars_) throw InvalidArgument("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_) accumulate(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_) throw InvalidArgument("polynomial variable count mismatch");
    Polynomial out(a.num_vars_);
    Exponents e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.terms_[e] += ca * cb;
        }
    }
    out.prune(0.0);
    return out;
}

Polynomial Polynomial::transform(const std::function<double(Exponents&, double)>& f) const {
    Polynomial out(num_vars_);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        const double nc = f(ne, c);
        out.add_term(ne, nc);
    }
    return out;
}

void Polynomial::prune(double threshold) {
    std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) <= threshold; });
}

}  // namespace qvbs
