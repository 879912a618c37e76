#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "qvbs/cli.hpp"
#include "qvbs/correlators.hpp"
#include "qvbs/mpsrep.hpp"
#include "qvbs/oracle.hpp"
#include "qvbs/qcore.hpp"
#include "qvbs/spectral.hpp"
#include "qvbs/verify.hpp"

namespace py = pybind11;
using namespace qvbs;

namespace {

HalfInteger half(double x) {
    const double t = 2.0 * x;
    if (std::abs(t - std::round(t)) > 1e-12) throw InvalidArgument("spin labels must be multiples of 1/2");
    return {static_cast<int>(std::lround(t))};
}

PairKind pair_of(const std::string& s) { return parse_pair(s); }

OnePointOperator one_point_of(const std::string& kind, int m) {
    if (kind == "sz") return OnePointOperator::sz();
    if (kind == "sz2") return OnePointOperator::sz_squared();
    if (kind == "projector") return OnePointOperator::projector(m);
    throw InvalidArgument("operator must be 'sz', 'sz2' or 'projector'");
}

SiteOperator site_op_of(const std::string& s) {
    if (s == "sz") return SiteOperator::Sz;
    if (s == "splus") return SiteOperator::Splus;
    if (s == "sminus") return SiteOperator::Sminus;
    throw InvalidArgument("site operator must be 'sz', 'splus' or 'sminus'");
}

py::dict spectrum_dict(const SpectrumReport& r) {
    py::dict d;
    d["spin"] = r.spin;
    d["q"] = r.q;
    d["eigenvalues"] = r.eigenvalues;
    d["degeneracies"] = r.degeneracies;
    d["numeric_eigenvalues"] = r.numeric_eigenvalues;
    d["max_eigenvalue_rel_error"] = r.max_eigenvalue_rel_error;
    d["max_eigen_residual"] = r.max_eigen_residual;
    d["max_intertwining_residual"] = r.max_intertwining_residual;
    d["max_norm_residual"] = r.max_norm_residual;
    d["max_leading_one_error"] = r.max_leading_one_error;
    d["min_block_separation"] = r.min_block_separation;
    d["passed"] = r.passed;
    d["failures"] = r.failures;
    return d;
}

py::dict check_dict(const CheckResult& c) {
    py::dict d;
    d["check"] = c.check;
    d["spin"] = c.spin;
    d["q"] = c.q;
    d["L"] = c.length;
    d["J"] = c.total;
    d["n"] = c.n;
    d["max_residual"] = c.max_residual;
    d["tolerance"] = c.tolerance;
    d["passed"] = c.passed;
    d["detail"] = c.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "q-deformed VBS transfer-matrix spectra, correlators and brute-force oracle";

    auto base = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<InvalidSpinTriple>(m, "InvalidSpinTriple", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    // q-combinatorics
    m.def("q_integer", [](int n, double q) { return q_integer(n, Deformation(q)); }, py::arg("n"), py::arg("q"));
    m.def("q_factorial", [](int n, double q) { return q_factorial(n, Deformation(q)); }, py::arg("n"), py::arg("q"));
    m.def("q_binomial", [](int n, int k, double q) { return q_binomial(n, k, Deformation(q)); }, py::arg("n"),
          py::arg("k"), py::arg("q"));
    m.def(
        "q_cgc",
        [](double s1, double m1, double s2, double m2, double j, double mm, double q) {
            return q_cgc(half(s1), half(s2), half(j), half(m1), half(m2), half(mm), Deformation(q));
        },
        "<s1 m1; s2 m2 | j m>_q", py::arg("s1"), py::arg("m1"), py::arg("s2"), py::arg("m2"), py::arg("j"),
        py::arg("m"), py::arg("q"));

    // transfer matrix and spectrum
    m.def("transfer_matrix", [](int S, double q) { return transfer_matrix(S, Deformation(q)).matrix(); },
          py::arg("spin"), py::arg("q"));
    m.def(
        "operator_insertion",
        [](int S, double q, const std::string& op) { return operator_insertion(S, Deformation(q), site_op_of(op)).matrix(); },
        py::arg("spin"), py::arg("q"), py::arg("op"));
    m.def("block_basis", &block_basis, py::arg("spin"), py::arg("j"));
    m.def("eigenvalue", [](int S, int l, double q) { return eigenvalue_closed(S, l, Deformation(q)); },
          py::arg("spin"), py::arg("level"), py::arg("q"));
    m.def("eigenvalues", [](int S, double q) {
        std::vector<double> v;
        for (int l = 0; l <= S; ++l) v.push_back(eigenvalue_closed(S, l, Deformation(q)));
        return v;
    }, py::arg("spin"), py::arg("q"));
    m.def("eigenvector", [](int S, int l, int j, double q) { return eigenvector(S, l, j, Deformation(q)); },
          py::arg("spin"), py::arg("level"), py::arg("j"), py::arg("q"));
    m.def("squared_norm", [](int S, int l, int j, double q) { return squared_norm_closed(S, l, j, Deformation(q)); },
          py::arg("spin"), py::arg("level"), py::arg("j"), py::arg("q"));
    m.def("intertwiner", [](int S, int j, double q) { return intertwiner(S, j, Deformation(q)).matrix(); },
          py::arg("spin"), py::arg("j"), py::arg("q"));
    m.def("verify_spectrum", [](int S, double q) { return spectrum_dict(verify_spectrum(S, Deformation(q))); },
          py::arg("spin"), py::arg("q"));

    // correlators
    m.def("log_norm_sq", [](int S, double q, int L) { return norm_sq_finite(S, Deformation(q), L).log_abs(); },
          "ln Tr G^L", py::arg("spin"), py::arg("q"), py::arg("L"));
    m.def("norm_sq", [](int S, double q, int L) { return norm_sq_finite(S, Deformation(q), L).value(); },
          py::arg("spin"), py::arg("q"), py::arg("L"));
    m.def(
        "one_point_finite",
        [](int S, double q, int L, const std::string& op, int mm) {
            return one_point_finite(S, Deformation(q), L, one_point_of(op, mm));
        },
        py::arg("spin"), py::arg("q"), py::arg("L"), py::arg("op") = "sz", py::arg("m") = 0);
    m.def(
        "one_point_thermo",
        [](int S, double q, const std::string& op, int mm) { return one_point_thermo(S, Deformation(q), one_point_of(op, mm)); },
        py::arg("spin"), py::arg("q"), py::arg("op") = "sz", py::arg("m") = 0);
    m.def("prob_sz", [](int S, double q, int mm) { return prob_sz(S, Deformation(q), mm); }, py::arg("spin"),
          py::arg("q"), py::arg("m"));
    m.def(
        "two_point_finite",
        [](int S, double q, int L, int r, const std::string& p) { return two_point_finite(S, Deformation(q), L, r, pair_of(p)); },
        py::arg("spin"), py::arg("q"), py::arg("L"), py::arg("r"), py::arg("pair") = "zz");
    m.def(
        "two_point_thermo",
        [](int S, double q, int r, const std::string& p) { return two_point_thermo(S, Deformation(q), r, pair_of(p)); },
        py::arg("spin"), py::arg("q"), py::arg("r"), py::arg("pair") = "zz");
    m.def(
        "two_point_asymptotic",
        [](int S, double q, int r, const std::string& p) {
            return pair_of(p) == PairKind::ZZ ? zz_asymptotic(S, Deformation(q), r) : pm_asymptotic(S, Deformation(q), r);
        },
        py::arg("spin"), py::arg("q"), py::arg("r"), py::arg("pair") = "zz");
    m.def(
        "asymptotic",
        [](int S, double q, const std::string& p) {
            const auto a = asymptotic(S, Deformation(q), pair_of(p));
            py::dict d;
            d["amplitude"] = a.amplitude;
            d["ratio"] = a.ratio;
            d["correlation_length"] = a.correlation_length;
            d["validity_radius"] = a.validity_radius;
            return d;
        },
        py::arg("spin"), py::arg("q"), py::arg("pair") = "zz");
    m.def("correlation_length", [](int S, double q) { return correlation_length(S, Deformation(q)); },
          py::arg("spin"), py::arg("q"));

    // oracle
    m.def("state_dimension", &state_dimension, py::arg("spin"), py::arg("L"));
    m.def(
        "ground_state",
        [](int S, double q, int L, const std::string& route) {
            const Deformation d(q);
            if (route == "poly") return poly_to_spin_state(build_vbs_poly(S, d, L), d).coeffs;
            if (route == "mps") return mps_state(S, d, L).coeffs;
            throw InvalidArgument("route must be 'poly' or 'mps'");
        },
        "Unnormalized ground state, lexicographic in (m_1..m_L) with m_1 most significant",
        py::arg("spin"), py::arg("q"), py::arg("L"), py::arg("route") = "poly");
    m.def("projector", [](int S, int J, double q) { return projector(S, J, Deformation(q)).matrix; },
          py::arg("spin"), py::arg("J"), py::arg("q"));
    m.def(
        "hamiltonian_spectrum",
        [](int S, double q, int L, const std::map<int, double>& couplings) {
            BondCouplings c;
            for (const auto& [J, v] : couplings) c.set(J, v);
            return hamiltonian_spectrum(S, Deformation(q), L, c);
        },
        py::arg("spin"), py::arg("q"), py::arg("L"), py::arg("couplings") = std::map<int, double>{});
    m.def(
        "oracle_correlator",
        [](int S, double q, int L, int r, const std::string& p) { return oracle_correlator(S, Deformation(q), L, r, pair_of(p)); },
        py::arg("spin"), py::arg("q"), py::arg("L"), py::arg("r"), py::arg("pair") = "zz");
    m.def(
        "oracle_one_point",
        [](int S, double q, int L, const std::string& op, int mm) {
            return oracle_one_point(S, Deformation(q), L, one_point_of(op, mm));
        },
        py::arg("spin"), py::arg("q"), py::arg("L"), py::arg("op") = "sz", py::arg("m") = 0);
    m.def(
        "verify_lowering",
        [](int S, int J, int n, double q) {
            const auto r = verify_lowering_closed_form(S, J, n, Deformation(q));
            py::dict d;
            d["relative_mismatch"] = r.relative_mismatch;
            d["vanishing_checked"] = r.vanishing_checked;
            d["vanishing_residual"] = r.vanishing_residual;
            d["passed"] = r.passed;
            return d;
        },
        py::arg("spin"), py::arg("J"), py::arg("n"), py::arg("q"));
    m.def(
        "run_verification",
        [](int S, std::vector<double> qs, std::vector<int> lengths, bool prop1, int jobs) {
            VerifyConfig c;
            c.spin = S;
            c.qs = std::move(qs);
            c.lengths = std::move(lengths);
            c.prop1 = prop1;
            c.jobs = jobs;
            validate(c);
            py::list out;
            for (const auto& r : run_verification(c)) out.append(check_dict(r));
            return out;
        },
        py::arg("spin"), py::arg("qs") = std::vector<double>{0.5, 1.0, 2.0},
        py::arg("lengths") = std::vector<int>{2, 3, 4, 5, 6}, py::arg("prop1") = false, py::arg("jobs") = 1);

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        "Runs the command-line tool in-process; returns (exit_code, stdout, stderr)", py::arg("args"));
}
