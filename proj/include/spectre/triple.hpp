#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectre/algebra.hpp"
#include "spectre/matrix.hpp"
#include "spectre/sign_table.hpp"

namespace spectre {

/// A finite real spectral triple (A, H, D, gamma?, J) with a declared
/// KO-dimension label.  The label is authoritative in degenerate cases
/// (e.g. D = 0) where the operators do not pin down every sign.
struct RealSpectralTriple {
  Representation rep;
  Matrix dirac;
  std::optional<Matrix> grading;
  Antiunitary real_structure;
  KOLabel ko;

  int hilbert_dim() const { return rep.hilbert_dim; }

  /// Schema-level invariants only: dimensions agree and the label parity
  /// matches the presence of gamma.  Axiom-level defects (non-Hermitian D,
  /// broken grading) are verify()'s business so they can be reported.
  void validate_shapes() const;

  /// Shapes plus the structural axioms: D Hermitian, grading Hermitian
  /// involution anticommuting with D and commuting with the algebra.
  void validate_structure(const Tolerance& tol = {}) const;
};

struct AxiomCheck {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool pass() const;
  double max_residual() const;
  const AxiomCheck* find(std::string_view name) const;
};

/// Residuals of all real-spectral-triple axioms for the declared label:
/// hermiticity of D, grading axioms, unitarity of J's unitary part,
/// J^2 = eps, DJ = eps' JD, J gamma = eps'' gamma J, and order-zero /
/// order-one over all algebra basis pairs.
AxiomReport verify(const RealSpectralTriple& t, const Tolerance& tol = {});

/// All extended labels whose sign column is consistent with the measured
/// signs of (J, D, gamma).  Degenerate operators (D = 0) satisfy both
/// commutation signs and therefore yield several labels; an empty result
/// means the measured signs match no row.
std::vector<KOLabel> infer_ko(const RealSpectralTriple& t, const Tolerance& tol = {});

/// Right action b^o = J b* J*.
Matrix opposite_action(const RealSpectralTriple& t, const Vector& b_coeffs);

/// Real-linear basis of {a in A : J a* J* = a} (star = true, the paper's
/// convention) or {a : J a J* = a} (star = false, the trivial-* convention
/// for real algebras).  Returned as coefficient vectors over the standard
/// basis; the list is a basis over R.  Requires the order-zero check to
/// pass; always contains the unit.
std::vector<Vector> j_fixed_subalgebra(const RealSpectralTriple& t, bool star = true,
                                       const Tolerance& tol = {});

/// True if the real-linear span of `vectors` contains `candidate` within tol.
bool real_span_contains(const std::vector<Vector>& vectors, const Vector& candidate,
                        double tol = 1e-8);

}  // namespace spectre
