#include "spectre/catalog.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace spectre {

namespace {

Representation scalars_on(int dim) {
  StructuredAlgebra a;
  a.factors = {{1, FactorField::Complex}};
  a.scalar_field = ScalarField::Complex;
  Representation rep;
  rep.algebra = a;
  rep.hilbert_dim = dim;
  rep.images = {identity(dim)};
  return rep;
}

RealSpectralTriple scalar_triple(int dim, Matrix d, std::optional<Matrix> g, Matrix u,
                                 const KOLabel& label) {
  return {scalars_on(dim), std::move(d), std::move(g), Antiunitary(std::move(u)), label};
}

}  // namespace

RealSpectralTriple one_point(const KOLabel& label) {
  label.validate();
  const Matrix is2 = Complex(0, 1) * sigma(2);
  const Matrix one = Matrix::Identity(1, 1);
  switch (label.n) {
    case 0:
      return label.variant == Variant::Plus
                 ? scalar_triple(2, sigma(1), sigma(3), sigma(0), label)
                 : scalar_triple(2, sigma(2), sigma(3), sigma(0), label);
    case 1:
      return scalar_triple(2, sigma(2), std::nullopt, sigma(0), label);
    case 2:
      return label.variant == Variant::Plus
                 ? scalar_triple(4, tensor(sigma(1), sigma(0)), tensor(sigma(3), sigma(0)),
                                 tensor(sigma(1), is2), label)
                 : scalar_triple(4, tensor(sigma(1), sigma(2)), tensor(sigma(3), sigma(0)),
                                 tensor(sigma(1), sigma(0)), label);
    case 3:
      return scalar_triple(2, sigma(0), std::nullopt, is2, label);
    case 4:
      return label.variant == Variant::Plus
                 ? scalar_triple(4, tensor(sigma(1), sigma(0)), tensor(sigma(3), sigma(0)),
                                 tensor(sigma(0), is2), label)
                 : scalar_triple(4, tensor(sigma(2), sigma(0)), tensor(sigma(3), sigma(0)),
                                 tensor(sigma(0), is2), label);
    case 5:
      return scalar_triple(2, sigma(1), std::nullopt, is2, label);
    case 6:
      return label.variant == Variant::Plus
                 ? scalar_triple(2, sigma(1), sigma(3), sigma(1), label)
                 : scalar_triple(2, sigma(1), sigma(3), is2, label);
    case 7:
      return scalar_triple(1, one, std::nullopt, one, label);
    default:
      throw std::invalid_argument("one_point: bad label");
  }
}

RealSpectralTriple two_point(double coupling) {
  StructuredAlgebra a;
  a.factors = {{1, FactorField::Complex}, {1, FactorField::Complex}};
  a.scalar_field = ScalarField::Complex;

  Representation rep;
  rep.algebra = a;
  rep.hilbert_dim = 4;
  // left multiplication by diag(a1, a2) on M_2(C), row-major basis e11,e12,e21,e22
  Matrix e1 = Matrix::Zero(2, 2), e2 = Matrix::Zero(2, 2);
  e1(0, 0) = 1;
  e2(1, 1) = 1;
  rep.images = {tensor(e1, sigma(0)), tensor(e2, sigma(0))};

  const Matrix d =
      0.5 * coupling * (tensor(sigma(1), sigma(0)) + tensor(sigma(0), sigma(1)));
  const Matrix g = tensor(sigma(3), sigma(3));
  // J(X) = X*: the swap permutation (i,j) -> (j,i) composed with conjugation
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1;
  swap(1, 2) = swap(2, 1) = 1;

  return {std::move(rep), d, g, Antiunitary(swap), KOLabel{0, Variant::Plus}};
}

RealSpectralTriple diagonal_real_commutative(const std::vector<double>& dirac_diagonal) {
  const int dim = static_cast<int>(dirac_diagonal.size());
  if (dim < 1) throw std::invalid_argument("diagonal_real_commutative: need dimension >= 1");

  StructuredAlgebra a;
  a.scalar_field = ScalarField::Real;
  a.factors.assign(dim, {1, FactorField::Real});

  Representation rep;
  rep.algebra = a;
  rep.hilbert_dim = dim;
  for (int k = 0; k < dim; ++k) {
    Matrix img = Matrix::Zero(dim, dim);
    img(k, k) = 1;
    rep.images.push_back(img);
  }

  Matrix d = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) d(k, k) = dirac_diagonal[k];

  return {std::move(rep), d, std::nullopt, Antiunitary(identity(dim)),
          KOLabel{7, Variant::None}};
}

// ---------------------------------------------------------------------------
// search_real_structure
// ---------------------------------------------------------------------------

namespace {

Vector vec_of(const Matrix& m) {
  Vector v(m.size());
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(idx++) = m(i, j);
  return v;
}

Matrix unvec(const Vector& v, Eigen::Index n) {
  Matrix m(n, n);
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = v(idx++);
  return m;
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

// Phase-canonical form: multiply by a global phase so the largest entry is
// real positive (the constraints are phase-invariant).
Matrix canonical_phase(const Matrix& u) {
  Eigen::Index bi = 0, bj = 0;
  double best = -1;
  for (Eigen::Index j = 0; j < u.cols(); ++j)
    for (Eigen::Index i = 0; i < u.rows(); ++i)
      if (std::abs(u(i, j)) > best + 1e-12) {
        best = std::abs(u(i, j));
        bi = i;
        bj = j;
      }
  if (best <= 0) return u;
  const Complex phase = u(bi, bj) / std::abs(u(bi, bj));
  return u / phase;
}

bool lexicographic_less(const Matrix& a, const Matrix& b) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex x = a(i, j), y = b(i, j);
      if (std::abs(x.real() - y.real()) > 1e-7) return x.real() < y.real();
      if (std::abs(x.imag() - y.imag()) > 1e-7) return x.imag() < y.imag();
    }
  return false;
}

}  // namespace

SearchOutcome search_real_structure(const Representation& rep, const Matrix& d,
                                    const std::optional<Matrix>& grading, const KOLabel& label,
                                    const SearchOptions& opts) {
  label.validate();
  if (label.even() != grading.has_value())
    throw std::invalid_argument("search_real_structure: grading must match label parity");
  const SignTriple signs = sign_table(label);
  const Eigen::Index n = rep.hilbert_dim;
  const Eigen::Index n2 = n * n;
  require_square(d, "search_real_structure");

  // --- exact linear constraints on vec(U), all complex-linear -------------
  // rows: U conj(D) - eps' D U ; U conj(g) - eps'' g U ; U - eps U^T
  std::vector<std::function<Matrix(const Matrix&)>> linear_maps;
  linear_maps.emplace_back([&](const Matrix& u) -> Matrix {
    return u * d.conjugate() - static_cast<double>(signs.eps_prime) * d * u;
  });
  if (grading)
    linear_maps.emplace_back([&](const Matrix& u) -> Matrix {
      return u * grading->conjugate() -
             static_cast<double>(*signs.eps_double_prime) * (*grading) * u;
    });
  linear_maps.emplace_back([&](const Matrix& u) -> Matrix {
    return u - static_cast<double>(signs.eps) * u.transpose();
  });

  Matrix constraint(static_cast<Eigen::Index>(linear_maps.size()) * n2, n2);
  for (Eigen::Index col = 0; col < n2; ++col) {
    Matrix e = unvec(Vector::Unit(n2, col), n);
    for (size_t r = 0; r < linear_maps.size(); ++r)
      constraint.block(static_cast<Eigen::Index>(r) * n2, col, n2, 1) = vec_of(linear_maps[r](e));
  }
  Eigen::JacobiSVD<Matrix> svd(constraint, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-10 * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  std::vector<Matrix> basis;  // orthonormal basis of the linear solution space
  for (Eigen::Index k = 0; k < n2; ++k)
    if (k >= sv.size() || sv(k) <= cutoff) basis.push_back(unvec(svd.matrixV().col(k), n));

  SearchOutcome outcome;
  if (basis.empty()) {
    outcome.linear_system_infeasible = true;
    return outcome;
  }

  // --- order-condition machinery -------------------------------------------
  // J b* J* must lie in W = commutant of {images} and {[D, images]}.
  std::vector<Matrix> commutant_generators;
  bool order_active = false;
  for (const auto& img : rep.images) {
    if (max_abs(img - Matrix(img(0, 0) * identity(n))) > 1e-14) order_active = true;
    commutant_generators.push_back(img);
    commutant_generators.push_back(d * img - img * d);
  }
  std::vector<Matrix> wbasis;
  if (order_active) {
    Matrix wc(static_cast<Eigen::Index>(commutant_generators.size()) * n2, n2);
    for (Eigen::Index col = 0; col < n2; ++col) {
      Matrix e = unvec(Vector::Unit(n2, col), n);
      for (size_t r = 0; r < commutant_generators.size(); ++r) {
        const Matrix& g = commutant_generators[r];
        wc.block(static_cast<Eigen::Index>(r) * n2, col, n2, 1) = vec_of(Matrix(e * g - g * e));
      }
    }
    Eigen::JacobiSVD<Matrix> wsvd(wc, Eigen::ComputeFullV);
    const auto& wsv = wsvd.singularValues();
    const double wcut = 1e-10 * std::max(wsv.size() > 0 ? wsv(0) : 0.0, 1.0);
    for (Eigen::Index k = 0; k < n2; ++k)
      if (k >= wsv.size() || wsv(k) <= wcut) wbasis.push_back(unvec(wsvd.matrixV().col(k), n));
    if (static_cast<Eigen::Index>(wbasis.size()) == n2) order_active = false;  // vacuous
  }

  auto project_to_commutant_complement = [&](const Matrix& x) -> Matrix {
    Matrix residual = x;
    for (const auto& w : wbasis) residual -= (vec_of(w).dot(vec_of(x))) * w;
    return residual;  // component of x orthogonal to W
  };

  auto project_linear = [&](const Matrix& u) -> Matrix {
    Matrix out = Matrix::Zero(n, n);
    for (const auto& b : basis) out += (vec_of(b).dot(vec_of(u))) * b;
    return out;
  };

  const double scale = std::max(1.0, max_abs(d));
  auto solution_residual = [&](const Matrix& u) -> double {
    double r = max_abs(Matrix(u.adjoint() * u) - identity(n));
    r = std::max(r, max_abs(Matrix(u * u.conjugate()) -
                            Matrix(static_cast<double>(signs.eps) * identity(n))));
    r = std::max(r, max_abs(Matrix(d * u) -
                            Matrix(static_cast<double>(signs.eps_prime) * u * d.conjugate())) /
                        scale);
    if (grading)
      r = std::max(r, max_abs(Matrix(u * grading->conjugate()) -
                              Matrix(static_cast<double>(*signs.eps_double_prime) * (*grading) * u)));
    if (order_active) {
      for (const auto& img : rep.images) {
        const Matrix bo = u * img.transpose() * u.adjoint();
        for (const auto& a : rep.images) {
          r = std::max(r, max_abs(Matrix(a * bo - bo * a)));
          const Matrix da = d * a - a * d;
          r = std::max(r, max_abs(Matrix(da * bo - bo * da)) / scale);
        }
      }
    }
    return r;
  };

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double accept = opts.tol.threshold(1.0) * 10;

  // Coordinates over the L-basis keep the linear constraints exact; the
  // remaining (quadratic) constraints become a least-squares residual solved
  // by Levenberg-Marquardt from random starts.
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  auto coords_to_matrix = [&](const Eigen::VectorXd& x) -> Matrix {
    Matrix u = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < m; ++k) u += Complex(x(2 * k), x(2 * k + 1)) * basis[k];
    return u;
  };
  auto append_real = [](Eigen::VectorXd& out, Eigen::Index& at, const Matrix& block) {
    for (Eigen::Index j = 0; j < block.cols(); ++j)
      for (Eigen::Index i = 0; i < block.rows(); ++i) {
        out(at++) = block(i, j).real();
        out(at++) = block(i, j).imag();
      }
  };
  const Eigen::Index residual_blocks =
      2 + (order_active ? static_cast<Eigen::Index>(rep.images.size()) : 0);
  const Eigen::Index f_len = residual_blocks * 2 * n2;
  auto residual_vector = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    const Matrix u = coords_to_matrix(x);
    Eigen::VectorXd f(f_len);
    Eigen::Index at = 0;
    append_real(f, at, Matrix(u.adjoint() * u - identity(n)));
    append_real(f, at, Matrix(u * u.conjugate() - static_cast<double>(signs.eps) * identity(n)));
    if (order_active)
      for (const auto& img : rep.images)
        append_real(f, at,
                    project_to_commutant_complement(Matrix(u * img.transpose() * u.adjoint())));
    return f;
  };

  for (int restart = 0; restart < opts.budget; ++restart) {
    Eigen::VectorXd x(2 * m);
    for (Eigen::Index k = 0; k < 2 * m; ++k) x(k) = gauss(rng);
    x *= std::sqrt(static_cast<double>(n)) / std::max(coords_to_matrix(x).norm(), 1e-12);

    double lambda = 1e-3;
    Eigen::VectorXd f = residual_vector(x);
    for (int it = 0; it < opts.max_iterations && f.cwiseAbs().maxCoeff() > 1e-13; ++it) {
      Eigen::MatrixXd jac(f_len, 2 * m);
      const double h = 1e-7;
      for (Eigen::Index k = 0; k < 2 * m; ++k) {
        Eigen::VectorXd xp = x;
        xp(k) += h;
        jac.col(k) = (residual_vector(xp) - f) / h;
      }
      const Eigen::MatrixXd jtj = jac.transpose() * jac;
      const Eigen::VectorXd jtf = jac.transpose() * f;
      bool stepped = false;
      for (int attempt = 0; attempt < 8; ++attempt) {
        Eigen::MatrixXd damped = jtj;
        damped.diagonal().array() += lambda;
        const Eigen::VectorXd delta = damped.ldlt().solve(-jtf);
        const Eigen::VectorXd x_next = x + delta;
        const Eigen::VectorXd f_next = residual_vector(x_next);
        if (f_next.squaredNorm() < f.squaredNorm()) {
          x = x_next;
          f = f_next;
          lambda = std::max(lambda / 3.0, 1e-12);
          stepped = true;
          break;
        }
        lambda *= 10.0;
      }
      if (!stepped) break;
    }

    Matrix u = polar_unitary(coords_to_matrix(x));
    u = project_linear(u);
    u = polar_unitary(u);
    if (solution_residual(u) > accept) continue;
    u = canonical_phase(u);
    const bool duplicate =
        std::any_of(outcome.solutions.begin(), outcome.solutions.end(),
                    [&](const Antiunitary& s) { return max_abs(s.unitary_part() - u) < 1e-6; });
    if (!duplicate) outcome.solutions.emplace_back(u);
  }

  std::sort(outcome.solutions.begin(), outcome.solutions.end(),
            [](const Antiunitary& a, const Antiunitary& b) {
              return lexicographic_less(a.unitary_part(), b.unitary_part());
            });
  return outcome;
}

}  // namespace spectre
