#pragma once

#include <stdexcept>
#include <utility>

#include "spectre/triple.hpp"

namespace spectre {

/// Thrown when a product would exceed the configured Hilbert-dimension cap.
class DimensionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The (M_+, M_-) pair of Pauli matrices used in the odd-odd real structure
/// J_pm = J_1 (x) J_2 (x) M_pm K, indexed by (n_1 mod 8, n_2 mod 8).
struct PauliChoice {
  Matrix m_plus;
  Matrix m_minus;
};
PauliChoice odd_odd_pauli(int n1, int n2);

/// J_beta: whichever of {J, J gamma} gives the triple the n_beta column of
/// the extended table.  Requires an even triple; throws if neither candidate
/// matches (corrupt triple).  In degenerate cases where both candidates
/// match, the declared variant decides.
Antiunitary j_beta(const RealSpectralTriple& t, int beta, const Tolerance& tol = {});

/// Same data with J replaced by J gamma and the variant flipped.
RealSpectralTriple toggle(const RealSpectralTriple& t);

struct ProductOptions {
  int variant = +1;          // selects J_+ / J_- where the theorem offers both
  int dimension_cap = 4096;  // products grow multiplicatively
  Tolerance tol;
};

/// Product of real spectral triples, all four parity cases.  The resulting
/// KO dimension is n1 + n2 mod 8; for even results the variant is inferred
/// from the measured signs, not assumed from the inputs.
RealSpectralTriple product(const RealSpectralTriple& t1, const RealSpectralTriple& t2,
                           const ProductOptions& opts = {});

/// The alternative even-even Dirac operator D1 (x) gamma2 + 1 (x) D2; its
/// spectrum agrees with that of the default D1 (x) 1 + gamma1 (x) D2.
Matrix alt_even_even_dirac(const RealSpectralTriple& t1, const RealSpectralTriple& t2);

}  // namespace spectre
