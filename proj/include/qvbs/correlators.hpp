#pragma once

// One- and two-point functions of the q-VBS state.
//
// Finite-L quantities are traces of products of G and its insertions G_A on
// the periodic chain; thermodynamic ones use the closed-form spectrum.
// Two-point functions take operators on sites 1 and r (r >= 2), so the
// distance between them is r - 1.

#include <string_view>

#include "qvbs/linalg.hpp"
#include "qvbs/mpsrep.hpp"
#include "qvbs/qcore.hpp"

namespace qvbs {

/// Value stored as mantissa * exp(log_scale) so that Tr G^L survives large L.
struct ScaledValue {
    double mantissa = 0.0;
    double log_scale = 0.0;

    double value() const;       // may overflow to inf
    double log_abs() const;     // ln|value|
};

enum class PairKind { ZZ, PM };  // <S^z_1 S^z_r>, <S^+_1 S^-_r>

std::string_view to_string(PairKind p);
PairKind parse_pair(std::string_view s);

/// One-site operator for one-point functions.
struct OnePointOperator {
    enum class Kind { Sz, Projector, SzSquared };
    Kind kind = Kind::Sz;
    int m = 0;  // only for Projector

    static OnePointOperator sz() { return {Kind::Sz, 0}; }
    static OnePointOperator projector(int m) { return {Kind::Projector, m}; }
    /// (S^z)^2 realised as sum_m m^2 |S;m><S;m|.
    static OnePointOperator sz_squared() { return {Kind::SzSquared, 0}; }
};

/// G_A for a one-point operator.
Matrix one_point_insertion(int spin, Deformation q, const OnePointOperator& a);

/// <Psi|Psi> = Tr G^L, L >= 2.
ScaledValue norm_sq_finite(int spin, Deformation q, int length);

/// Tr(G_A G^{L-1}) / Tr(G^L).
double one_point_finite(int spin, Deformation q, int length, const OnePointOperator& a);

/// L -> infinity limit: <<lambda_0|G_A|lambda_0>> / (lambda_0 <<lambda_0|lambda_0>>).
double one_point_thermo(int spin, Deformation q, const OnePointOperator& a);

/// Probability of S^z = m on a site in the infinite chain (closed form).
double prob_sz(int spin, Deformation q, int m);

/// Tr(G_A G^{r-2} G_B G^{L-r}) / Tr(G^L), 2 <= r <= L.
double two_point_finite(int spin, Deformation q, int length, int r, PairKind pair);

/// Spectral sum over all (l, j) with unnormalized eigenvectors and closed-form
/// squared norms, r >= 2.
double two_point_thermo(int spin, Deformation q, int r, PairKind pair);

/// _0<<lambda_1|G_{S^z}|lambda_0>>_0 from its closed double sum.
double matrix_element_zz(int spin, Deformation q);

/// _{-1}<<lambda_1|G_{S^-}|lambda_0>>_0 from its closed double sum.
double matrix_element_pm(int spin, Deformation q);

/// Leading large-r term of <S^z_1 S^z_r>, r >= 2.
double zz_asymptotic(int spin, Deformation q, int r);

/// Leading large-r term of <S^+_1 S^-_r>, r >= 2.
double pm_asymptotic(int spin, Deformation q, int r);

/// 1 / ln([S+2]/[S]).
double correlation_length(int spin, Deformation q);

struct AsymptoticResult {
    double amplitude = 0.0;           // value(r) = amplitude * ratio^r
    double ratio = 0.0;               // lambda_1/lambda_0 = -[S]/[S+2]
    double correlation_length = 0.0;  // -1/ln|ratio|
    int validity_radius = 2;          // first r with subleading contamination < 1e-6; 2 when S = 1
};

inline constexpr int kMaxValidityRadius = 400;

AsymptoticResult asymptotic(int spin, Deformation q, PairKind pair);

}  // namespace qvbs
