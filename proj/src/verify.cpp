#include "qvbs/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qvbs/correlators.hpp"
#include "qvbs/spin_ops.hpp"

namespace qvbs {

const std::map<std::string, double>& default_check_tolerances() {
    static const std::map<std::string, double> t{
        {"norm_trace", 1e-10},
        {"mps_norm_trace", 1e-10},
        {"route_collinearity", 1e-10},
        {"site_degree", 0.0},
        {"annihilation", 1e-8},
        {"hamiltonian_zero", 1e-8},
        {"two_point_zz", 1e-10},
        {"two_point_pm", 1e-10},
        {"one_point_sz", 1e-12},
        {"one_point_projector", 1e-10},
        {"sz_squared", 1e-12},
        {"projector_algebra", 1e-10},
        {"projector_completeness", 1e-10},
        {"prob_sz_normalization", 1e-12},
        {"q_vandermonde", 1e-10},
        {"lowering_closed_form", 1e-10},
        {"lowering_vanishing", 1e-10},
    };
    return t;
}

namespace {

double tol_for(const std::map<std::string, double>& over, const std::string& name) {
    if (auto it = over.find(name); it != over.end()) return it->second;
    return default_check_tolerances().at(name);
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(17);
    s << x;
    return s.str();
}

CheckResult make(const std::string& name, int spin, std::optional<double> q, std::optional<int> length,
                 double residual, const std::map<std::string, double>& over) {
    CheckResult r;
    r.check = name;
    r.spin = spin;
    r.q = q;
    r.length = length;
    r.max_residual = residual;
    r.tolerance = tol_for(over, name);
    r.passed = std::isfinite(residual) && residual <= r.tolerance;
    return r;
}

}  // namespace

void validate(const VerifyConfig& c) {
    if (c.spin < 1) throw InvalidArgument("spin S must be >= 1");
    if (c.qs.empty()) throw InvalidArgument("q grid is empty");
    for (double q : c.qs) Deformation{q};
    if (c.chain_checks) {
        if (c.lengths.empty()) throw InvalidArgument("L list is empty");
        for (int L : c.lengths) require_state_budget(c.spin, L);
    }
    if (c.prop1 && c.spin > 3) throw InvalidArgument("the lowering-operator grid supports S <= 3");
    for (const auto& [name, v] : c.tolerances) {
        if (!default_check_tolerances().count(name)) throw InvalidArgument("unknown check '" + name + "'");
        if (!(v > 0.0)) throw InvalidArgument("tolerances must be positive");
    }
    if (c.vandermonde_samples < 0) throw InvalidArgument("sample count must be >= 0");
}

std::vector<CheckResult> chain_checks(int S, Deformation q, int L, const BondCouplings& couplings,
                                      const std::map<std::string, double>& tol) {
    require_state_budget(S, L);
    std::vector<CheckResult> out;
    const double qv = q.value();

    const PolynomialState poly = build_vbs_poly(S, q, L);
    int bad_degree = 0;
    for (const auto& [e, c] : poly.poly.terms())
        for (int k = 0; k < L; ++k) bad_degree += (e[2 * k] + e[2 * k + 1] != 2 * S);
    out.push_back(make("site_degree", S, qv, L, bad_degree, tol));
    out.back().passed = bad_degree == 0;

    const SpinState psi = poly_to_spin_state(poly, q);
    const SpinState mps = mps_state(S, q, L);
    const ScaledValue trace = norm_sq_finite(S, q, L);
    const double tr = trace.value();
    out.push_back(make("norm_trace", S, qv, L, std::abs(psi.norm_sq() - tr) / tr, tol));
    out.back().detail = "Tr G^L=" + fmt(tr);
    out.push_back(make("mps_norm_trace", S, qv, L, std::abs(mps.norm_sq() - tr) / tr, tol));

    const double dot = psi.coeffs.dot(mps.coeffs);
    const double cosine = dot / std::sqrt(psi.norm_sq() * mps.norm_sq());
    out.push_back(make("route_collinearity", S, qv, L, 1.0 - std::abs(cosine), tol));
    out.back().detail = "scalar=" + fmt(dot / psi.norm_sq());

    const double norm = std::sqrt(psi.norm_sq());
    double worst = 0.0;
    for (int J = S + 1; J <= 2 * S; ++J) {
        const Matrix p = projector(S, J, q).matrix;
        for (int k = 0; k < L; ++k) worst = std::max(worst, apply_two_site(psi, p, k).coeffs.norm() / norm);
    }
    out.push_back(make("annihilation", S, qv, L, worst, tol));

    // ||H|| >= max C_J(k) because every term is positive semidefinite.
    double cmax = 0.0;
    for (int J = S + 1; J <= 2 * S; ++J)
        for (int k = 0; k < L; ++k) cmax = std::max(cmax, couplings(J, k));
    out.push_back(make("hamiltonian_zero", S, qv, L,
                       apply_hamiltonian(psi, q, couplings).coeffs.norm() / (norm * cmax), tol));

    const Matrix sz = spin_ops::sz(S), sp = spin_ops::splus(S), sm = spin_ops::sminus(S);
    double zz = 0.0, pm = 0.0;
    for (int r = 2; r <= L; ++r) {
        zz = std::max(zz, std::abs(expectation_two_point(psi, sz, sz, r) - two_point_finite(S, q, L, r, PairKind::ZZ)));
        pm = std::max(pm, std::abs(expectation_two_point(psi, sp, sm, r) - two_point_finite(S, q, L, r, PairKind::PM)));
    }
    out.push_back(make("two_point_zz", S, qv, L, zz, tol));
    out.push_back(make("two_point_pm", S, qv, L, pm, tol));

    const double direct_sz = expectation_one_point(psi, sz);
    out.push_back(make("one_point_sz", S, qv, L,
                       std::max(std::abs(direct_sz), std::abs(one_point_finite(S, q, L, OnePointOperator::sz()))), tol));

    double proj = 0.0, weighted = 0.0;
    for (int m = -S; m <= S; ++m) {
        const double direct = expectation_one_point(psi, spin_ops::projector(S, m));
        proj = std::max(proj, std::abs(direct - one_point_finite(S, q, L, OnePointOperator::projector(m))));
        weighted += double(m) * m * direct;
    }
    out.push_back(make("one_point_projector", S, qv, L, proj, tol));
    out.push_back(make("sz_squared", S, qv, L, std::abs(expectation_one_point(psi, sz * sz) - weighted), tol));
    return out;
}

std::vector<CheckResult> projector_checks(int S, Deformation q, const std::map<std::string, double>& tol) {
    const int d = (2 * S + 1) * (2 * S + 1);
    std::vector<Matrix> p;
    for (int J = 0; J <= 2 * S; ++J) p.push_back(projector(S, J, q).matrix);
    double algebra = 0.0;
    Matrix sum = Matrix::Zero(d, d);
    for (int J = 0; J <= 2 * S; ++J) {
        sum += p[J];
        for (int K = 0; K <= 2 * S; ++K) {
            const Matrix expect = J == K ? p[J] : Matrix::Zero(d, d);
            algebra = std::max(algebra, (p[J] * p[K] - expect).cwiseAbs().maxCoeff());
        }
    }
    double total = 0.0;
    for (int m = -S; m <= S; ++m) total += prob_sz(S, q, m);
    std::vector<CheckResult> out;
    out.push_back(make("projector_algebra", S, q.value(), std::nullopt, algebra, tol));
    out.push_back(make("projector_completeness", S, q.value(), std::nullopt,
                       (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), tol));
    out.push_back(make("prob_sz_normalization", S, q.value(), std::nullopt, std::abs(total - 1.0), tol));
    return out;
}

CheckResult vandermonde_check(std::uint64_t seed, int samples, double tol) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ab(0, 8), nn(0, 8);
    std::uniform_real_distribution<double> lq(std::log(0.25), std::log(4.0));
    double worst = 0.0;
    for (int t = 0; t < samples; ++t) {
        const int alpha = ab(rng), beta = ab(rng), n = nn(rng);
        const Deformation q(std::exp(lq(rng)));
        double lhs = 0.0;
        for (int k = 0; k <= n; ++k)
            lhs += q_binomial(alpha + n - k, n - k, q) * q_binomial(beta + k, k, q) * q.pow(k * (alpha + beta + 2.0));
        const double rhs = q_binomial(alpha + beta + n + 1, n, q) * q.pow(n * (1.0 + beta));
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    CheckResult r;
    r.check = "q_vandermonde";
    r.max_residual = worst;
    r.tolerance = tol;
    r.passed = worst <= tol;
    r.detail = "seed=" + std::to_string(seed) + " samples=" + std::to_string(samples);
    return r;
}

std::vector<CheckResult> lowering_checks(int S, int J, Deformation q, int n_max, double tol) {
    const int top = n_max < 0 ? 2 * J + 1 : std::min(n_max, 2 * J + 1);
    CheckResult agree;
    agree.check = "lowering_closed_form";
    agree.spin = S;
    agree.q = q.value();
    agree.total = J;
    agree.n = top;
    agree.tolerance = tol;
    std::vector<CheckResult> out;
    for (int n = 0; n <= top; ++n) {
        const auto rep = verify_lowering_closed_form(S, J, n, q, tol);
        agree.max_residual = std::max(agree.max_residual, rep.relative_mismatch);
        if (rep.vanishing_checked) {
            CheckResult v = agree;
            v.check = "lowering_vanishing";
            v.n = n;
            v.max_residual = rep.vanishing_residual;
            v.passed = rep.vanishing_residual <= tol;
            out.push_back(v);
        }
    }
    agree.passed = agree.max_residual <= tol;
    agree.detail = "n=0.." + std::to_string(top);
    out.insert(out.begin(), agree);
    return out;
}

std::vector<CheckResult> run_verification(const VerifyConfig& c) {
    validate(c);
    const int S = c.spin;
    using Task = std::function<std::vector<CheckResult>()>;
    std::vector<Task> tasks;
    const auto& tol = c.tolerances;
    if (c.chain_checks) {
        tasks.push_back([&] { return std::vector<CheckResult>{vandermonde_check(c.seed, c.vandermonde_samples, tol_for(tol, "q_vandermonde"))}; });
        for (double qv : c.qs) {
            tasks.push_back([&, qv] { return projector_checks(S, Deformation(qv), tol); });
            for (int L : c.lengths)
                tasks.push_back([&, qv, L] { return chain_checks(S, Deformation(qv), L, c.couplings, tol); });
        }
    }
    if (c.prop1) {
        for (double qv : c.qs)
            for (int J = 0; J <= 2 * S; ++J)
                tasks.push_back([&, qv, J] {
                    auto r = lowering_checks(S, J, Deformation(qv), c.n_max, tol_for(tol, "lowering_closed_form"));
                    for (auto& x : r) {
                        x.tolerance = tol_for(tol, x.check);
                        x.passed = x.max_residual <= x.tolerance;
                    }
                    return r;
                });
    }
    auto parts = parallel_map<std::vector<CheckResult>>(static_cast<int>(tasks.size()), c.jobs,
                                                        [&](int i) { return tasks[static_cast<size_t>(i)](); });
    std::vector<CheckResult> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace qvbs
