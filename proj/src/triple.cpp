#include "spectre/triple.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spectre {

namespace {

double operator_scale(const RealSpectralTriple& t) {
  double s = std::max(1.0, max_abs(t.dirac));
  if (t.grading) s = std::max(s, max_abs(*t.grading));
  return s;
}

}  // namespace

void RealSpectralTriple::validate_shapes() const {
  ko.validate();
  rep.algebra.validate();
  const int n = rep.hilbert_dim;
  require_square(dirac, "dirac");
  if (dirac.rows() != n) throw std::invalid_argument("triple: dirac dimension mismatch");
  if (real_structure.dim() != n)
    throw std::invalid_argument("triple: real structure dimension mismatch");
  for (const auto& img : rep.images)
    if (img.rows() != n) throw std::invalid_argument("triple: representation dimension mismatch");
  if (grading) {
    require_square(*grading, "grading");
    if (grading->rows() != n) throw std::invalid_argument("triple: grading dimension mismatch");
  }
  if (ko.even() != grading.has_value())
    throw std::invalid_argument("triple: grading present iff KO dimension is even");
}

void RealSpectralTriple::validate_structure(const Tolerance& tol) const {
  validate_shapes();
  const int n = rep.hilbert_dim;
  const double thr = tol.threshold(operator_scale(*this));
  if (max_abs(dirac - dirac.adjoint()) > thr)
    throw std::invalid_argument("triple: dirac is not Hermitian");
  if (grading) {
    const Matrix& g = *grading;
    if (max_abs(g - g.adjoint()) > thr || max_abs(Matrix(g * g) - identity(n)) > thr)
      throw std::invalid_argument("triple: grading is not a Hermitian involution");
    if (max_abs(Matrix(dirac * g + g * dirac)) > thr)
      throw std::invalid_argument("triple: grading does not anticommute with dirac");
    for (const auto& img : rep.images)
      if (max_abs(Matrix(g * img - img * g)) > thr)
        throw std::invalid_argument("triple: grading does not commute with the algebra");
  }
}

bool AxiomReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

double AxiomReport::max_residual() const {
  double m = 0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

const AxiomCheck* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

AxiomReport verify(const RealSpectralTriple& t, const Tolerance& tol) {
  const SignTriple signs = sign_table(t.ko);
  const Matrix& U = t.real_structure.unitary_part();
  const Matrix& D = t.dirac;
  const int n = t.hilbert_dim();
  const double scale = operator_scale(t);

  AxiomReport report;
  auto add = [&](std::string name, double residual, double check_scale) {
    const double thr = tol.threshold(check_scale);
    report.checks.push_back({std::move(name), residual, thr, residual <= thr});
  };

  add("D_hermitian", max_abs(D - D.adjoint()), scale);
  add("J_unitary", max_abs(Matrix(U.adjoint() * U) - identity(n)), 1.0);
  add("J_squared=eps",
      max_abs(t.real_structure.square() - Matrix(static_cast<double>(signs.eps) * identity(n))),
      1.0);
  add("DJ=eps'JD",
      max_abs(Matrix(D * U) - Matrix(static_cast<double>(signs.eps_prime) * U * D.conjugate())),
      scale);

  if (t.grading) {
    const Matrix& g = *t.grading;
    add("grading_hermitian", max_abs(g - g.adjoint()), scale);
    add("grading_square", max_abs(Matrix(g * g) - identity(n)), scale);
    add("grading_anticommutes_D", max_abs(Matrix(D * g + g * D)), scale);
    double comm = 0;
    for (const auto& img : t.rep.images) comm = std::max(comm, max_abs(Matrix(g * img - img * g)));
    add("grading_commutes_algebra", comm, scale);
    if (signs.eps_double_prime) {
      add("Jgamma=eps''gammaJ",
          max_abs(Matrix(U * g.conjugate()) -
                  Matrix(static_cast<double>(*signs.eps_double_prime) * g * U)),
          scale);
    }
  }

  // order-zero / order-one over basis pairs; bilinearity extends them.
  double o0 = 0, o1 = 0;
  std::vector<Matrix> opposites, dirac_commutators;
  opposites.reserve(t.rep.images.size());
  for (const auto& img : t.rep.images) {
    opposites.push_back(t.real_structure.conjugate(img.adjoint()));
    dirac_commutators.push_back(D * img - img * D);
  }
  for (size_t i = 0; i < t.rep.images.size(); ++i) {
    const Matrix& a = t.rep.images[i];
    const Matrix& da = dirac_commutators[i];
    for (const auto& bo : opposites) {
      o0 = std::max(o0, max_abs(Matrix(a * bo - bo * a)));
      o1 = std::max(o1, max_abs(Matrix(da * bo - bo * da)));
    }
  }
  add("order_zero", o0, scale);
  add("order_one", o1, scale);
  return report;
}

std::vector<KOLabel> infer_ko(const RealSpectralTriple& t, const Tolerance& tol) {
  const Matrix& U = t.real_structure.unitary_part();
  const Matrix& D = t.dirac;
  const int n = t.hilbert_dim();
  const Matrix jsq = t.real_structure.square();
  const double dscale = std::max(1.0, max_abs(D));

  auto consistent = [&](int sign, const Matrix& lhs, const Matrix& rhs, double scale) {
    return max_abs(lhs - Matrix(static_cast<double>(sign) * rhs)) <= tol.threshold(scale);
  };

  std::vector<int> eps_set, epsp_set, epspp_set;
  for (int s : {+1, -1}) {
    if (consistent(s, jsq, identity(n), 1.0)) eps_set.push_back(s);
    if (consistent(s, Matrix(D * U), Matrix(U * D.conjugate()), dscale)) epsp_set.push_back(s);
    if (t.grading &&
        consistent(s, Matrix(U * t.grading->conjugate()), Matrix(*t.grading * U), 1.0))
      epspp_set.push_back(s);
  }

  auto contains = [](const std::vector<int>& set, int v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };

  std::vector<KOLabel> out;
  for (const KOLabel& label : all_labels()) {
    if (label.even() != t.grading.has_value()) continue;
    const SignTriple s = sign_table(label);
    if (!contains(eps_set, s.eps) || !contains(epsp_set, s.eps_prime)) continue;
    if (s.eps_double_prime && !contains(epspp_set, *s.eps_double_prime)) continue;
    out.push_back(label);
  }
  return out;
}

Matrix opposite_action(const RealSpectralTriple& t, const Vector& b_coeffs) {
  const Matrix b = t.rep.materialize(b_coeffs);
  return t.real_structure.conjugate(b.adjoint());
}

std::vector<Vector> j_fixed_subalgebra(const RealSpectralTriple& t, bool star,
                                       const Tolerance& tol) {
  const AxiomReport report = verify(t, tol);
  const AxiomCheck* o0 = report.find("order_zero");
  if (o0 && !o0->pass)
    throw std::invalid_argument(
        "j_fixed_subalgebra: order-zero condition fails; the fixed set need not be central");

  // a |-> J a* J* (or J a J*) is real-linear on the algebra; solve over the
  // real span of the basis.
  const std::vector<Matrix> span = t.rep.real_span();
  const Eigen::Index m = static_cast<Eigen::Index>(span.size());
  const Eigen::Index n2 = static_cast<Eigen::Index>(t.hilbert_dim()) * t.hilbert_dim();
  Eigen::MatrixXd constraint(2 * n2, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Matrix image = star ? t.real_structure.conjugate(span[k].adjoint())
                              : t.real_structure.conjugate(span[k]);
    const Matrix diff = image - span[k];
    Eigen::Index idx = 0;
    for (Eigen::Index j = 0; j < diff.cols(); ++j)
      for (Eigen::Index i = 0; i < diff.rows(); ++i, ++idx) {
        constraint(idx, k) = diff(i, j).real();
        constraint(n2 + idx, k) = diff(i, j).imag();
      }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraint, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-9 * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  std::vector<Vector> out;
  const Eigen::Index basis_count = static_cast<Eigen::Index>(t.rep.images.size());
  for (Eigen::Index k = 0; k < m; ++k) {
    const bool in_null = k >= sv.size() || sv(k) <= cutoff;
    if (!in_null) continue;
    const Eigen::VectorXd real_coeffs = svd.matrixV().col(k);
    Vector coeffs = Vector::Zero(basis_count);
    for (Eigen::Index i = 0; i < basis_count; ++i) {
      coeffs(i) += real_coeffs(i);
      if (t.rep.algebra.scalar_field == ScalarField::Complex)
        coeffs(i) += Complex(0, 1) * real_coeffs(basis_count + i);
    }
    out.push_back(coeffs);
  }
  if (out.empty())
    throw std::runtime_error(
        "j_fixed_subalgebra: empty solution space (the unit is always fixed; numerical failure)");
  if (!real_span_contains(out, t.rep.unit_coefficients()))
    throw std::runtime_error("j_fixed_subalgebra: solution space does not contain the unit");
  return out;
}

bool real_span_contains(const std::vector<Vector>& vectors, const Vector& candidate, double tol) {
  if (vectors.empty()) return false;
  const Eigen::Index m = static_cast<Eigen::Index>(vectors.size());
  const Eigen::Index dim = vectors.front().size();
  Eigen::MatrixXd basis(2 * dim, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    basis.col(k).head(dim) = vectors[k].real();
    basis.col(k).tail(dim) = vectors[k].imag();
  }
  Eigen::VectorXd target(2 * dim);
  target.head(dim) = candidate.real();
  target.tail(dim) = candidate.imag();
  const Eigen::VectorXd fit = basis.colPivHouseholderQr().solve(target);
  const double resid = (basis * fit - target).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, target.cwiseAbs().maxCoeff());
  return resid <= tol * scale;
}

}  // namespace spectre
