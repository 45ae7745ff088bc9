#pragma once

#include <utility>
#include <vector>

#include "spectre/triple.hpp"

namespace spectre {

using CoefficientPair = std::pair<Vector, Vector>;  // (a_i, b_i) over the standard basis

/// Gauge potential A = sum_i a_i [D, b_i], kept together with its terms so
/// the same perturbation can be negated or re-examined later.
struct OneForm {
  std::vector<CoefficientPair> terms;
  Matrix matrix;

  bool hermitian(const Tolerance& tol = {}) const { return is_hermitian(matrix, tol); }
  OneForm negated() const;
};

OneForm one_form(const RealSpectralTriple& t, const std::vector<CoefficientPair>& pairs);

/// Hermitian closure (A + A^dagger)/2, with the term list extended so the
/// result is still of the form sum a_i [D, b_i]:
/// (a [D,b])^dagger = b* [D, a*] - [D, b* a*].
OneForm symmetrized(const RealSpectralTriple& t, const OneForm& a);

/// Inner fluctuation D -> D + A + eps' J A J*.  The one-form must be
/// Hermitian (symmetrize explicitly first if it is not); the result is
/// re-verified and an exception raised naming the broken axiom on failure.
RealSpectralTriple fluctuate(const RealSpectralTriple& t, const OneForm& a,
                             const Tolerance& tol = {});

/// Finite fiber perturbation Phi_A = sum_i (a_i [D, b_i] - [D, b_i^o] a_i^o)
/// with x^o = J x* J*.  For Hermitian A this equals A + eps' J A J*, so
/// D + Phi_A is the fluctuated Dirac operator; the relation is checked by
/// callers, not assumed here.
Matrix finite_fluct_components(const RealSpectralTriple& t,
                               const std::vector<CoefficientPair>& pairs);

struct SplitResult {
  Matrix d0;  // J-compatible part, d0 J = eps' J d0
  Matrix m;   // endomorphism part, m J = -eps' J m
  double resid_d0 = 0.0;
  double resid_m = 0.0;
};

/// Unique splitting d = d0 + m with m = (d - eps' J d J*) / 2.
/// Requires J^2 = eps I for the declared signs.
SplitResult j_compatible_split(const Matrix& d, const Antiunitary& j, const SignTriple& signs,
                               const Tolerance& tol = {});

/// sum over eigenvalues |lambda| <= cutoff of
/// sum_k coefficient_k (lambda/cutoff)^(2 power_k).
double spectral_action(const RealSpectralTriple& t, double cutoff_scale,
                       const std::vector<std::pair<int, double>>& weights);

}  // namespace spectre
