#pragma once

#include <utility>
#include <vector>

#include "spectre/matrix.hpp"

namespace spectre {

enum class ScalarField { Real, Complex };
enum class FactorField { Real, Complex, Quaternion };

/// One Wedderburn factor M_k(K).  Quaternionic factors are represented as
/// 2k x 2k complex matrices through the standard embedding
/// a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]].
struct AlgebraFactor {
  int size = 1;
  FactorField field = FactorField::Complex;
};

/// Finite C*-algebra declared as an ordered direct sum of matrix factors
/// over a scalar field K.
struct StructuredAlgebra {
  std::vector<AlgebraFactor> factors;
  ScalarField scalar_field = ScalarField::Complex;

  void validate() const;
};

/// Abstract basis label: matrix unit e_pq of a factor times a unit scalar.
/// unit: 0 = 1, 1 = i (complex factors over R), 2 = j, 3 = k (quaternionic).
/// Over a complex scalar field the unit is always 0 and coefficients are
/// complex; over R the units enumerate a real-form basis.
struct BasisElement {
  int factor = 0;
  int p = 0;
  int q = 0;
  int unit = 0;
};

/// Basis element count: sum k^2 over the K-dimension convention
/// (k^2 for M_k over its own field; 2k^2 / 4k^2 real-form counts for
/// complex / quaternionic factors over R).
std::vector<BasisElement> standard_basis(const StructuredAlgebra& a);

/// Representation-space dimension of each factor in the canonical block
/// representation (k, or 2k for quaternionic factors).
int canonical_block_dim(const AlgebraFactor& f);
int canonical_hilbert_dim(const StructuredAlgebra& a);

/// Index of the adjoint basis element and the sign picked up:
/// (e_pq u)^* = star_sign * e_qp u.
std::pair<int, double> star_index(const StructuredAlgebra& a, int basis_index);

/// Faithful *-representation of a StructuredAlgebra, given by one image per
/// standard basis element.
struct Representation {
  StructuredAlgebra algebra;
  int hilbert_dim = 0;
  std::vector<Matrix> images;

  /// Block-diagonal representation with one canonical block per factor.
  static Representation canonical(const StructuredAlgebra& a);

  /// sum_k coeffs[k] * images[k].  Coefficients over a real scalar field must
  /// have negligible imaginary part.
  Matrix materialize(const Vector& coeffs) const;

  Vector unit_coefficients() const;
  Matrix unit() const;

  /// Least-squares expansion of m over the images (coefficient field matches
  /// the scalar field).  If residual is non-null it receives max|m - fit|.
  Vector coefficients_of(const Matrix& m, double* residual = nullptr) const;

  /// Real-linear span matrices: images over R-scalar algebras, images plus
  /// i*images over C-scalar algebras.
  std::vector<Matrix> real_span() const;

  /// Checks shapes, unitality, *-preservation, multiplicativity on basis
  /// pairs and faithfulness (linear independence of the images).
  void validate(const Tolerance& tol = {}) const;
};

/// Basis of the centre: the identity of each factor, plus i*1_factor for
/// complex factors over a real scalar field.  Returned as coefficient
/// vectors over the standard basis.
std::vector<Vector> center_basis(const StructuredAlgebra& a);

/// Basis of {x in A : x (x) 1 = 1 (x) x in A (x)_K A}, computed as the
/// nullspace of the tensor-difference operator on a faithful representation
/// of A (x) A (Gram-matrix form of the same linear system; over R the
/// representation is realified so the tensor product is taken over R).
/// Result as coefficient vectors over the standard basis; the lemma says
/// this is always span{1}.
std::vector<Vector> diagonal_center(const StructuredAlgebra& a, double rank_tol = 1e-8);
int diagonal_center_dimension(const StructuredAlgebra& a, double rank_tol = 1e-8);

/// Tensor product algebra with basis pairing: standard_basis(result)[m]
/// corresponds to standard_basis(a)[index_pairs[m].first] tensor
/// standard_basis(b)[index_pairs[m].second].
///
/// Supported: both algebras over C (factor pairs become M_{kl}(C)), or a
/// tensor over R where in every factor pair at least one side is a real
/// factor.  C (x)_R C and friends change Wedderburn type and are rejected.
struct AlgebraTensor {
  StructuredAlgebra algebra;
  std::vector<std::pair<int, int>> index_pairs;
};
AlgebraTensor tensor_algebra(const StructuredAlgebra& a, const StructuredAlgebra& b);

/// Reinterpret a complex-scalar algebra over R (same factors, real-form
/// basis, images extended by i*images).
Representation realify(const Representation& rep);

/// Representation of tensor_algebra(r1.algebra, r2.algebra) on H1 (x) H2.
/// Mixed scalar fields are resolved by realifying the complex side.
Representation tensor_representation(const Representation& r1, const Representation& r2);

}  // namespace spectre
