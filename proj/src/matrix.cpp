#include "spectre/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace spectre {

Tolerance Tolerance::from_env() {
  Tolerance tol;
  if (const char* raw = std::getenv("SPECTRE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end != raw && std::isfinite(v) && v >= 0.0) {
      tol.abs_eps = v;
      tol.rel_eps = 100.0 * v;
    }
  }
  return tol;
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

void require_square(const Matrix& m, const std::string& what) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(what + ": matrix must be square, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (!all_finite(m)) throw std::invalid_argument(what + ": matrix has non-finite entries");
}

bool is_hermitian(const Matrix& m, const Tolerance& tol) {
  require_square(m, "is_hermitian");
  const double resid = max_abs(m - m.adjoint());
  return resid <= tol.threshold(max_abs(m));
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<double> eigenvalues_hermitian(const Matrix& m, const Tolerance& tol) {
  if (!is_hermitian(m, tol))
    throw std::invalid_argument("eigenvalues_hermitian: input is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues_hermitian: eigensolver failed to converge");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

const Matrix& sigma(int k) {
  static const Matrix s[4] = {
      (Matrix(2, 2) << 1, 0, 0, 1).finished(),
      (Matrix(2, 2) << 0, 1, 1, 0).finished(),
      (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Matrix(2, 2) << 1, 0, 0, -1).finished(),
  };
  if (k < 0 || k > 3) throw std::invalid_argument("sigma: index must be 0..3");
  return s[k];
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Antiunitary::Antiunitary(Matrix u, const Tolerance& tol) : u_(std::move(u)) {
  require_square(u_, "Antiunitary");
  const double resid = max_abs(Matrix(u_.adjoint() * u_) - identity(u_.rows()));
  if (resid > tol.threshold(1.0))
    throw std::invalid_argument("Antiunitary: unitary part fails u^dagger u = I, residual " +
                                std::to_string(resid));
}

Matrix Antiunitary::square() const { return u_ * u_.conjugate(); }

Matrix Antiunitary::conjugate(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim())
    throw std::invalid_argument("Antiunitary::conjugate: dimension mismatch");
  return u_ * m.conjugate() * u_.adjoint();
}

Vector Antiunitary::apply(const Vector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("Antiunitary::apply: dimension mismatch");
  return u_ * v.conjugate();
}

Antiunitary Antiunitary::compose_with(const Matrix& gamma) const {
  if (gamma.rows() != dim() || gamma.cols() != dim())
    throw std::invalid_argument("Antiunitary::compose_with: dimension mismatch");
  return Antiunitary(u_ * gamma.conjugate());
}

}  // namespace spectre
