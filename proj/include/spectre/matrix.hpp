#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spectre {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Absolute/relative tolerance pair used by every residual check.
/// A residual r measured against operands of magnitude s passes when
/// r <= abs_eps + rel_eps * s.
struct Tolerance {
  double abs_eps = 1e-10;
  double rel_eps = 1e-8;

  double threshold(double scale) const { return abs_eps + rel_eps * scale; }

  /// Reads SPECTRE_TOL (absolute tolerance; relative is scaled by 100).
  static Tolerance from_env();
};

/// Largest entry magnitude; 0 for empty matrices.
double max_abs(const Matrix& m);

bool all_finite(const Matrix& m);

void require_square(const Matrix& m, const std::string& what);

/// max|m - m^dagger| <= abs + rel * max|m|
bool is_hermitian(const Matrix& m, const Tolerance& tol = {});

/// Kronecker product, left factor slow index:
/// (a (x) b)[i*rb + k, j*cb + l] = a(i,j) * b(k,l).
Matrix tensor(const Matrix& a, const Matrix& b);

/// Real eigenvalues of a Hermitian matrix, ascending.
/// Throws std::invalid_argument if the input fails is_hermitian.
std::vector<double> eigenvalues_hermitian(const Matrix& m, const Tolerance& tol = {});

/// Pauli matrices sigma_0..sigma_3.
const Matrix& sigma(int k);

/// Identity of the given dimension.
Matrix identity(Eigen::Index dim);

/// Antiunitary operator J = U * conj(.) with respect to the standard basis.
/// Only the unitary part is stored; J is never materialised as a linear matrix.
class Antiunitary {
 public:
  explicit Antiunitary(Matrix u, const Tolerance& tol = {});

  const Matrix& unitary_part() const { return u_; }
  Eigen::Index dim() const { return u_.rows(); }

  /// J^2 as a linear operator: u * conj(u). Compare against +-I yourself;
  /// a generic antiunitary need not square to a sign.
  Matrix square() const;

  /// J m J* = u * conj(m) * u^dagger (the antilinear conjugation acting on
  /// operators).
  Matrix conjugate(const Matrix& m) const;

  /// J v = u * conj(v).
  Vector apply(const Vector& v) const;

  /// J composed with a grading: J' = J.gamma, unitary part u * conj(gamma).
  Antiunitary compose_with(const Matrix& gamma) const;

 private:
  Matrix u_;
};

}  // namespace spectre
