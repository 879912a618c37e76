#pragma once

// Oracle cross-validation suite: each check compares a transfer-matrix or
// closed-form quantity with the brute-force state, or tests an algebraic
// identity, and reports its worst residual against a tolerance.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvbs/detail/parallel.hpp"
#include "qvbs/oracle.hpp"

namespace qvbs {

struct CheckResult {
    std::string check;
    int spin = 0;
    std::optional<double> q;
    std::optional<int> length;
    std::optional<int> total;  // J
    std::optional<int> n;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

/// Default tolerance per check name.
const std::map<std::string, double>& default_check_tolerances();

struct VerifyConfig {
    int spin = 1;
    std::vector<double> qs{0.5, 1.0, 2.0};
    std::vector<int> lengths{2, 3, 4, 5, 6};
    bool chain_checks = true;   // state, projector and correlator checks
    bool prop1 = false;         // lowering-operator grid
    int n_max = -1;             // cap on n for the lowering-operator grid; -1 means 2J+1
    std::uint64_t seed = 12345;
    int vandermonde_samples = 200;
    BondCouplings couplings;
    std::map<std::string, double> tolerances;  // overrides by check name
    int jobs = 1;
};

/// Throws InvalidArgument / BudgetExceeded before any work when the
/// configuration is out of range.
void validate(const VerifyConfig& c);

/// Runs every enabled check. Results are ordered by the grid, independent of
/// the number of worker threads.
std::vector<CheckResult> run_verification(const VerifyConfig& c);

/// Individual families, exposed for the acceptance suite.
std::vector<CheckResult> chain_checks(int spin, Deformation q, int length, const BondCouplings& couplings,
                                      const std::map<std::string, double>& tol = {});
std::vector<CheckResult> projector_checks(int spin, Deformation q, const std::map<std::string, double>& tol = {});
CheckResult vandermonde_check(std::uint64_t seed, int samples, double tol = 1e-10);
std::vector<CheckResult> lowering_checks(int spin, int total, Deformation q, int n_max = -1, double tol = 1e-10);

}  // namespace qvbs
