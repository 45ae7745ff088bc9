#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectre/triple.hpp"

namespace spectre {

/// Smallest nondegenerate instance per extended KO label: A = C acting as
/// scalars, nonzero D and a traceless grading wherever the sign column
/// admits them, so that infer_ko is sharp.  Dimensions: 1 (class 7),
/// 2 (classes 0, 1, 5, 6), 4 (classes 2, 4, and class 3 uses 2).
RealSpectralTriple one_point(const KOLabel& label);

/// Two-point geometry A = C + C realised on H = M_2(C) (dimension 4) with
/// left/right multiplication, D(X) = m/2 (sigma_1 X + X sigma_1),
/// gamma(X) = sigma_3 X sigma_3 and J(X) = X*.  KO dimension 0+; the only
/// two-point realisation with off-diagonal coupling that satisfies the
/// order-one condition.  Nonzero eigenvalues of D are +-m.
RealSpectralTriple two_point(double coupling = 1.0);

/// Commutative triple over R: A = R^d acting diagonally on C^d, D the given
/// real diagonal, J = complex conjugation.  KO dimension 7.
RealSpectralTriple diagonal_real_commutative(const std::vector<double>& dirac_diagonal);

struct SearchOptions {
  int budget = 32;          // random restarts
  std::uint64_t seed = 0x5EED;
  int max_iterations = 300;
  Tolerance tol;
};

struct SearchOutcome {
  std::vector<Antiunitary> solutions;      // deduplicated, lexicographically sorted
  bool linear_system_infeasible = false;   // the linear constraints alone have nullity 0
};

/// Finds antiunitaries J = U conj(.) making (rep, d, grading) a real
/// spectral triple of the requested KO label.  The linear constraints
/// (U conj(D) = eps' D U, U conj(gamma) = eps'' gamma U, and U = eps U^T,
/// which for unitary U is equivalent to J^2 = eps) are solved exactly as a
/// nullspace; unitarity and the order conditions are enforced by
/// alternating projection with seeded random restarts.
SearchOutcome search_real_structure(const Representation& rep, const Matrix& d,
                                    const std::optional<Matrix>& grading, const KOLabel& label,
                                    const SearchOptions& opts = {});

}  // namespace spectre
