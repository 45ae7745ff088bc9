#include "spectre/algebra.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace spectre {

namespace {

// Quaternion units as 2x2 complex blocks: 1, i, j, k.
const Matrix& quaternion_unit(int u) {
  static const Matrix units[4] = {
      sigma(0),
      Complex(0, 1) * sigma(3),
      Complex(0, 1) * sigma(2),
      Complex(0, 1) * sigma(1),
  };
  return units[u];
}

// u*v = sign * w in the quaternions; returns (w, sign).
std::pair<int, double> quaternion_mult(int u, int v) {
  if (u == 0) return {v, 1.0};
  if (v == 0) return {u, 1.0};
  if (u == v) return {0, -1.0};
  // i,j,k cyclic: i*j = k, j*k = i, k*i = j
  static const int next[4] = {0, 2, 3, 1};
  if (next[u] == v) return {6 - u - v, 1.0};
  return {6 - u - v, -1.0};
}

int unit_count(const StructuredAlgebra& a, const AlgebraFactor& f) {
  if (a.scalar_field == ScalarField::Complex) return 1;
  switch (f.field) {
    case FactorField::Real: return 1;
    case FactorField::Complex: return 2;
    case FactorField::Quaternion: return 4;
  }
  return 1;
}

Matrix matrix_unit(int k, int p, int q) {
  Matrix e = Matrix::Zero(k, k);
  e(p, q) = 1.0;
  return e;
}

// vec over R of a complex matrix: [Re entries; Im entries].
Eigen::VectorXd vec_real(const Matrix& m) {
  Eigen::VectorXd v(2 * m.size());
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      v(idx) = m(i, j).real();
      v(idx + m.size()) = m(i, j).imag();
      ++idx;
    }
  return v;
}

Vector vec_complex(const Matrix& m) {
  Vector v(m.size());
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(idx++) = m(i, j);
  return v;
}

}  // namespace

void StructuredAlgebra::validate() const {
  if (factors.empty()) throw std::invalid_argument("StructuredAlgebra: no factors");
  for (const auto& f : factors) {
    if (f.size < 1) throw std::invalid_argument("StructuredAlgebra: factor size must be >= 1");
    if (scalar_field == ScalarField::Complex && f.field != FactorField::Complex)
      throw std::invalid_argument(
          "StructuredAlgebra: complex scalar field requires complex factors");
  }
}

std::vector<BasisElement> standard_basis(const StructuredAlgebra& a) {
  a.validate();
  std::vector<BasisElement> out;
  for (int f = 0; f < static_cast<int>(a.factors.size()); ++f) {
    const int k = a.factors[f].size;
    const int units = unit_count(a, a.factors[f]);
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q)
        for (int u = 0; u < units; ++u) out.push_back({f, p, q, u});
  }
  return out;
}

int canonical_block_dim(const AlgebraFactor& f) {
  return f.field == FactorField::Quaternion ? 2 * f.size : f.size;
}

int canonical_hilbert_dim(const StructuredAlgebra& a) {
  int n = 0;
  for (const auto& f : a.factors) n += canonical_block_dim(f);
  return n;
}

std::pair<int, double> star_index(const StructuredAlgebra& a, int basis_index) {
  const auto basis = standard_basis(a);
  const BasisElement e = basis.at(basis_index);
  const BasisElement target{e.factor, e.q, e.p, e.unit};
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    const auto& b = basis[i];
    if (b.factor == target.factor && b.p == target.p && b.q == target.q && b.unit == target.unit)
      return {i, e.unit == 0 ? 1.0 : -1.0};
  }
  throw std::logic_error("star_index: adjoint basis element not found");
}

Representation Representation::canonical(const StructuredAlgebra& a) {
  a.validate();
  Representation rep;
  rep.algebra = a;
  rep.hilbert_dim = canonical_hilbert_dim(a);

  std::vector<int> offsets;
  int off = 0;
  for (const auto& f : a.factors) {
    offsets.push_back(off);
    off += canonical_block_dim(f);
  }

  for (const auto& e : standard_basis(a)) {
    const auto& f = a.factors[e.factor];
    Matrix block;
    if (f.field == FactorField::Quaternion)
      block = tensor(matrix_unit(f.size, e.p, e.q), quaternion_unit(e.unit));
    else
      block = (e.unit == 1 ? Complex(0, 1) : Complex(1, 0)) * matrix_unit(f.size, e.p, e.q);
    Matrix img = Matrix::Zero(rep.hilbert_dim, rep.hilbert_dim);
    img.block(offsets[e.factor], offsets[e.factor], block.rows(), block.cols()) = block;
    rep.images.push_back(std::move(img));
  }
  return rep;
}

Matrix Representation::materialize(const Vector& coeffs) const {
  if (coeffs.size() != static_cast<Eigen::Index>(images.size()))
    throw std::invalid_argument("materialize: coefficient count mismatch");
  Matrix out = Matrix::Zero(hilbert_dim, hilbert_dim);
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    if (algebra.scalar_field == ScalarField::Real && std::abs(coeffs(k).imag()) > 1e-12)
      throw std::invalid_argument("materialize: real-scalar algebra given complex coefficients");
    out += coeffs(k) * images[k];
  }
  return out;
}

Vector Representation::unit_coefficients() const {
  const auto basis = standard_basis(algebra);
  Vector c = Vector::Zero(basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].p == basis[i].q && basis[i].unit == 0) c(i) = 1.0;
  return c;
}

Matrix Representation::unit() const { return materialize(unit_coefficients()); }

Vector Representation::coefficients_of(const Matrix& m, double* residual) const {
  const Eigen::Index count = static_cast<Eigen::Index>(images.size());
  Vector coeffs(count);
  if (algebra.scalar_field == ScalarField::Complex) {
    Matrix basis_mat(static_cast<Eigen::Index>(hilbert_dim) * hilbert_dim, count);
    for (Eigen::Index k = 0; k < count; ++k) basis_mat.col(k) = vec_complex(images[k]);
    coeffs = basis_mat.colPivHouseholderQr().solve(vec_complex(m));
  } else {
    Eigen::MatrixXd basis_mat(2 * static_cast<Eigen::Index>(hilbert_dim) * hilbert_dim, count);
    for (Eigen::Index k = 0; k < count; ++k) basis_mat.col(k) = vec_real(images[k]);
    Eigen::VectorXd real_coeffs = basis_mat.colPivHouseholderQr().solve(vec_real(m));
    for (Eigen::Index k = 0; k < count; ++k) coeffs(k) = real_coeffs(k);
  }
  if (residual) *residual = max_abs(m - materialize(coeffs));
  return coeffs;
}

std::vector<Matrix> Representation::real_span() const {
  std::vector<Matrix> out = images;
  if (algebra.scalar_field == ScalarField::Complex)
    for (const auto& img : images) out.push_back(Complex(0, 1) * img);
  return out;
}

void Representation::validate(const Tolerance& tol) const {
  algebra.validate();
  const auto basis = standard_basis(algebra);
  if (images.size() != basis.size())
    throw std::invalid_argument("Representation: image count does not match basis size");
  for (const auto& img : images) {
    require_square(img, "Representation image");
    if (img.rows() != hilbert_dim)
      throw std::invalid_argument("Representation: image dimension mismatch");
  }

  const double scale = 1.0 + [&] {
    double s = 0;
    for (const auto& img : images) s = std::max(s, max_abs(img));
    return s;
  }();

  // unitality
  const Matrix one = unit();
  for (const auto& img : images)
    if (max_abs(Matrix(one * img) - img) > tol.threshold(scale))
      throw std::invalid_argument("Representation: unit does not act as identity");

  // *-preservation: images[star(k)] == sign * images[k]^dagger
  for (size_t k = 0; k < basis.size(); ++k) {
    const auto [sk, sign] = star_index(algebra, static_cast<int>(k));
    if (max_abs(images[sk] - Matrix(sign * images[k].adjoint())) > tol.threshold(scale))
      throw std::invalid_argument("Representation: not *-preserving on basis");
  }

  // multiplicativity on basis pairs, exhaustive for small bases
  std::map<std::tuple<int, int, int, int>, int> lookup;
  for (size_t i = 0; i < basis.size(); ++i)
    lookup[{basis[i].factor, basis[i].p, basis[i].q, basis[i].unit}] = static_cast<int>(i);
  auto expected_product = [&](const BasisElement& x, const BasisElement& y) -> Matrix {
    if (x.factor != y.factor || x.q != y.p) return Matrix::Zero(hilbert_dim, hilbert_dim);
    const auto [w, sign] = quaternion_mult(x.unit, y.unit);
    return sign * images[lookup.at({x.factor, x.p, y.q, w})];
  };
  std::mt19937_64 rng(0x5EED);
  const size_t pairs_total = basis.size() * basis.size();
  const size_t sample = std::min<size_t>(pairs_total, 1024);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  for (size_t s = 0; s < sample; ++s) {
    size_t i, j;
    if (pairs_total <= 1024) {
      i = s / basis.size();
      j = s % basis.size();
    } else {
      i = pick(rng);
      j = pick(rng);
    }
    const Matrix prod = images[i] * images[j];
    if (max_abs(prod - expected_product(basis[i], basis[j])) > tol.threshold(scale * scale))
      throw std::invalid_argument("Representation: not multiplicative on basis pair");
  }

  // faithfulness: linear independence of images over the coefficient field
  Eigen::Index count = static_cast<Eigen::Index>(images.size());
  Eigen::MatrixXd stacked(2 * static_cast<Eigen::Index>(hilbert_dim) * hilbert_dim, count);
  for (Eigen::Index k = 0; k < count; ++k) stacked.col(k) = vec_real(images[k]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  const auto& sv = svd.singularValues();
  if (algebra.scalar_field == ScalarField::Real) {
    if (sv(sv.size() - 1) <= 1e-10 * sv(0))
      throw std::invalid_argument("Representation: images not linearly independent (not faithful)");
  } else {
    // complex independence: stack [vec(img); vec(i img)] and demand real rank 2*count
    Eigen::MatrixXd stacked2(2 * static_cast<Eigen::Index>(hilbert_dim) * hilbert_dim, 2 * count);
    for (Eigen::Index k = 0; k < count; ++k) {
      stacked2.col(k) = vec_real(images[k]);
      stacked2.col(count + k) = vec_real(Matrix(Complex(0, 1) * images[k]));
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd2(stacked2);
    const auto& sv2 = svd2.singularValues();
    if (sv2(sv2.size() - 1) <= 1e-10 * sv2(0))
      throw std::invalid_argument("Representation: images not linearly independent (not faithful)");
  }
}

std::vector<Vector> center_basis(const StructuredAlgebra& a) {
  const auto basis = standard_basis(a);
  std::vector<Vector> out;
  for (int f = 0; f < static_cast<int>(a.factors.size()); ++f) {
    Vector id = Vector::Zero(basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i].factor == f && basis[i].p == basis[i].q && basis[i].unit == 0) id(i) = 1.0;
    out.push_back(id);
    if (a.scalar_field == ScalarField::Real && a.factors[f].field == FactorField::Complex) {
      Vector imag_id = Vector::Zero(basis.size());
      for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].factor == f && basis[i].p == basis[i].q && basis[i].unit == 1)
          imag_id(i) = 1.0;
      out.push_back(imag_id);
    }
  }
  return out;
}

std::vector<Vector> diagonal_center(const StructuredAlgebra& a, double rank_tol) {
  const Representation rep = Representation::canonical(a);
  const Eigen::Index count = static_cast<Eigen::Index>(rep.images.size());
  const double n = static_cast<double>(rep.hilbert_dim);

  std::vector<Vector> out;
  if (a.scalar_field == ScalarField::Complex) {
    // Gram of E -> E (x) I - I (x) E on H (x) H:
    // <T(E), T(F)> = 2 n tr(E^dag F) - 2 conj(tr E) tr F.
    Matrix gram(count, count);
    for (Eigen::Index i = 0; i < count; ++i)
      for (Eigen::Index j = 0; j < count; ++j) {
        const Complex tEF = (rep.images[i].adjoint() * rep.images[j]).trace();
        const Complex tE = rep.images[i].trace(), tF = rep.images[j].trace();
        gram(i, j) = 2.0 * n * tEF - 2.0 * std::conj(tE) * tF;
      }
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const auto& ev = es.eigenvalues();
    const double cutoff = rank_tol * std::max(ev(ev.size() - 1), 1.0);
    for (Eigen::Index k = 0; k < ev.size(); ++k)
      if (ev(k) <= cutoff) out.push_back(es.eigenvectors().col(k));
  } else {
    // Realified: H_R has dimension 2n and the same Gram identity holds with
    // tr(E_R^T F_R) = 2 Re tr(E^dag F), tr(E_R) = 2 Re tr(E).
    Eigen::MatrixXd gram(count, count);
    for (Eigen::Index i = 0; i < count; ++i)
      for (Eigen::Index j = 0; j < count; ++j) {
        const double tEF = (rep.images[i].adjoint() * rep.images[j]).trace().real();
        const double tE = rep.images[i].trace().real(), tF = rep.images[j].trace().real();
        gram(i, j) = 8.0 * n * tEF - 8.0 * tE * tF;
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const auto& ev = es.eigenvalues();
    const double cutoff = rank_tol * std::max(ev(ev.size() - 1), 1.0);
    for (Eigen::Index k = 0; k < ev.size(); ++k)
      if (ev(k) <= cutoff) out.push_back(es.eigenvectors().col(k).cast<Complex>());
  }
  return out;
}

int diagonal_center_dimension(const StructuredAlgebra& a, double rank_tol) {
  return static_cast<int>(diagonal_center(a, rank_tol).size());
}

AlgebraTensor tensor_algebra(const StructuredAlgebra& a, const StructuredAlgebra& b) {
  a.validate();
  b.validate();
  AlgebraTensor out;
  const bool both_complex =
      a.scalar_field == ScalarField::Complex && b.scalar_field == ScalarField::Complex;
  out.algebra.scalar_field = both_complex ? ScalarField::Complex : ScalarField::Real;

  for (const auto& fa : a.factors)
    for (const auto& fb : b.factors) {
      AlgebraFactor f;
      f.size = fa.size * fb.size;
      if (both_complex) {
        f.field = FactorField::Complex;
      } else if (fa.field == FactorField::Real) {
        f.field = fb.field;
      } else if (fb.field == FactorField::Real) {
        f.field = fa.field;
      } else {
        throw std::invalid_argument(
            "tensor_algebra: tensor over R of two non-real factors changes Wedderburn type "
            "(unsupported)");
      }
      out.algebra.factors.push_back(f);
    }

  std::map<std::tuple<int, int, int, int>, int> la, lb;
  const auto basis_a = standard_basis(a);
  const auto basis_b = standard_basis(b);
  for (size_t i = 0; i < basis_a.size(); ++i)
    la[{basis_a[i].factor, basis_a[i].p, basis_a[i].q, basis_a[i].unit}] = static_cast<int>(i);
  for (size_t i = 0; i < basis_b.size(); ++i)
    lb[{basis_b[i].factor, basis_b[i].p, basis_b[i].q, basis_b[i].unit}] = static_cast<int>(i);

  const int nb = static_cast<int>(b.factors.size());
  for (const auto& e : standard_basis(out.algebra)) {
    const int fa_idx = e.factor / nb, fb_idx = e.factor % nb;
    const int l = b.factors[fb_idx].size;
    const int p = e.p / l, r = e.p % l;
    const int q = e.q / l, s = e.q % l;
    int ua = 0, ub = 0;
    if (!both_complex) {
      if (a.factors[fa_idx].field == FactorField::Real)
        ub = e.unit;
      else
        ua = e.unit;
    }
    out.index_pairs.emplace_back(la.at({fa_idx, p, q, ua}), lb.at({fb_idx, r, s, ub}));
  }
  return out;
}

Representation realify(const Representation& rep) {
  if (rep.algebra.scalar_field == ScalarField::Real) return rep;
  Representation out;
  out.algebra = rep.algebra;
  out.algebra.scalar_field = ScalarField::Real;
  out.hilbert_dim = rep.hilbert_dim;

  std::map<std::tuple<int, int, int>, int> lookup;
  const auto basis = standard_basis(rep.algebra);
  for (size_t i = 0; i < basis.size(); ++i)
    lookup[{basis[i].factor, basis[i].p, basis[i].q}] = static_cast<int>(i);
  for (const auto& e : standard_basis(out.algebra)) {
    const Matrix& img = rep.images[lookup.at({e.factor, e.p, e.q})];
    out.images.push_back(e.unit == 1 ? Matrix(Complex(0, 1) * img) : img);
  }
  return out;
}

Representation tensor_representation(const Representation& r1, const Representation& r2) {
  Representation a = r1, b = r2;
  if (a.algebra.scalar_field != b.algebra.scalar_field) {
    if (a.algebra.scalar_field == ScalarField::Complex) a = realify(a);
    if (b.algebra.scalar_field == ScalarField::Complex) b = realify(b);
  }
  const AlgebraTensor tensored = tensor_algebra(a.algebra, b.algebra);
  Representation out;
  out.algebra = tensored.algebra;
  out.hilbert_dim = a.hilbert_dim * b.hilbert_dim;
  out.images.reserve(tensored.index_pairs.size());
  for (const auto& [i, j] : tensored.index_pairs)
    out.images.push_back(tensor(a.images[i], b.images[j]));
  return out;
}

}  // namespace spectre
