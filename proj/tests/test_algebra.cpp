#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "test_support.hpp"

using namespace spectre;
using namespace spectre::testing;

namespace {

StructuredAlgebra make(std::vector<AlgebraFactor> factors, ScalarField scalar) {
  StructuredAlgebra a;
  a.factors = std::move(factors);
  a.scalar_field = scalar;
  return a;
}

const auto C = FactorField::Complex;
const auto R = FactorField::Real;
const auto H = FactorField::Quaternion;

}  // namespace

TEST_CASE("standard basis counts") {
  CHECK(standard_basis(make({{1, C}, {1, C}}, ScalarField::Complex)).size() == 2);
  CHECK(standard_basis(make({{2, C}}, ScalarField::Complex)).size() == 4);
  CHECK(standard_basis(make({{2, C}, {1, C}}, ScalarField::Complex)).size() == 5);
  // real-form counts: k^2, 2k^2, 4k^2
  CHECK(standard_basis(make({{2, R}}, ScalarField::Real)).size() == 4);
  CHECK(standard_basis(make({{2, C}}, ScalarField::Real)).size() == 8);
  CHECK(standard_basis(make({{1, H}}, ScalarField::Real)).size() == 4);
  CHECK(standard_basis(make({{2, H}, {3, C}, {1, R}}, ScalarField::Real)).size() ==
        16 + 18 + 1);
}

TEST_CASE("algebra invariants") {
  CHECK_THROWS_AS(make({}, ScalarField::Complex).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make({{1, R}}, ScalarField::Complex).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make({{0, C}}, ScalarField::Complex).validate(), std::invalid_argument);
  CHECK_NOTHROW(make({{1, H}}, ScalarField::Real).validate());
}

TEST_CASE("canonical representations validate") {
  for (const auto& a : {make({{2, C}, {1, C}}, ScalarField::Complex),
                        make({{2, R}, {1, C}}, ScalarField::Real),
                        make({{1, H}, {2, H}}, ScalarField::Real)}) {
    const Representation rep = Representation::canonical(a);
    CHECK_NOTHROW(rep.validate());
    CHECK(approx_equal(rep.unit(), identity(rep.hilbert_dim)));
  }
}

TEST_CASE("quaternionic embedding is a *-representation") {
  const Representation rep = Representation::canonical(make({{1, H}}, ScalarField::Real));
  REQUIRE(rep.images.size() == 4);
  // j^2 = k^2 = -1, ij = k
  CHECK(approx_equal(Matrix(rep.images[2] * rep.images[2]), Matrix(-identity(2))));
  CHECK(approx_equal(Matrix(rep.images[3] * rep.images[3]), Matrix(-identity(2))));
  CHECK(approx_equal(Matrix(rep.images[1] * rep.images[2]), rep.images[3]));
  // quaternion-invariance: commutes with j0 = (i sigma_2) conj
  const Antiunitary j0(Complex(0, 1) * sigma(2));
  for (const auto& img : rep.images) CHECK(max_abs(j0.conjugate(img) - img) < 1e-14);
}

TEST_CASE("center basis") {
  const auto m2 = make({{2, C}}, ScalarField::Complex);
  auto centers = center_basis(m2);
  REQUIRE(centers.size() == 1);
  CHECK(approx_equal(Representation::canonical(m2).materialize(centers[0]), identity(2)));

  const auto c2 = make({{1, C}, {1, C}}, ScalarField::Complex);
  centers = center_basis(c2);
  REQUIRE(centers.size() == 2);
  const Representation rep = Representation::canonical(c2);
  Matrix e1 = Matrix::Zero(2, 2), e2 = Matrix::Zero(2, 2);
  e1(0, 0) = 1;
  e2(1, 1) = 1;
  CHECK(approx_equal(rep.materialize(centers[0]), e1));
  CHECK(approx_equal(rep.materialize(centers[1]), e2));

  // M_2(C) as an algebra over R: center {I, iI}
  const auto m2r = make({{2, C}}, ScalarField::Real);
  centers = center_basis(m2r);
  REQUIRE(centers.size() == 2);
  const Representation repr = Representation::canonical(m2r);
  CHECK(approx_equal(repr.materialize(centers[0]), identity(2)));
  CHECK(approx_equal(repr.materialize(centers[1]), Matrix(Complex(0, 1) * identity(2))));

  // quaternionic factor contributes only its identity
  CHECK(center_basis(make({{1, H}}, ScalarField::Real)).size() == 1);
}

TEST_CASE("center elements commute with the whole basis") {
  for (const auto& a : {make({{2, C}, {1, C}}, ScalarField::Complex),
                        make({{2, C}}, ScalarField::Real),
                        make({{1, H}, {2, R}}, ScalarField::Real)}) {
    const Representation rep = Representation::canonical(a);
    for (const auto& c : center_basis(a)) {
      const Matrix z = rep.materialize(c);
      for (const auto& img : rep.images) CHECK(max_abs(Matrix(z * img - img * z)) < 1e-14);
    }
  }
}

TEST_CASE("center via generic commutant solve agrees for M_2(C) over R") {
  // solve [x, e] = 0 over the real span directly
  const auto a = make({{2, C}}, ScalarField::Real);
  const Representation rep = Representation::canonical(a);
  const auto span = rep.real_span();
  const Eigen::Index m = static_cast<Eigen::Index>(span.size());
  Eigen::MatrixXd rows(2 * 4 * static_cast<Eigen::Index>(rep.images.size()) * 2, m);
  rows.setZero();
  Eigen::Index at = 0;
  for (const auto& img : rep.images) {
    for (Eigen::Index k = 0; k < m; ++k) {
      const Matrix comm = span[k] * img - img * span[k];
      Eigen::Index idx = at;
      for (Eigen::Index jj = 0; jj < comm.cols(); ++jj)
        for (Eigen::Index ii = 0; ii < comm.rows(); ++ii) {
          rows(idx, k) = comm(ii, jj).real();
          rows(idx + comm.size(), k) = comm(ii, jj).imag();
          ++idx;
        }
    }
    at += 2 * 4;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
  const auto& sv = svd.singularValues();
  int nullity = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) <= 1e-9 * sv(0)) ++nullity;
  nullity += static_cast<int>(m - sv.size());
  CHECK(nullity == 2);  // = |center_basis| for M_2(C) over R
}

TEST_CASE("diagonal center is one-dimensional and spanned by the unit") {
  for (const auto& a : {make({{1, C}}, ScalarField::Complex),
                        make({{1, C}, {1, C}}, ScalarField::Complex),
                        make({{2, C}, {1, C}}, ScalarField::Complex),
                        make({{1, R}}, ScalarField::Real),
                        make({{1, C}}, ScalarField::Real),
                        make({{1, H}}, ScalarField::Real),
                        make({{2, H}, {3, C}, {1, R}}, ScalarField::Real)}) {
    const auto null_basis = diagonal_center(a);
    REQUIRE(null_basis.size() == 1);
    const Representation rep = Representation::canonical(a);
    CHECK(real_span_contains(null_basis, rep.unit_coefficients(), 1e-8));
  }
}

TEST_CASE("diagonal center cross-check against dense tensor materialization") {
  // independent oracle: materialize x (x) 1 - 1 (x) x on H (x) H explicitly
  // (realified over R) and take the SVD nullspace
  auto dense_nullity = [](const StructuredAlgebra& a) {
    const Representation rep = Representation::canonical(a);
    const Eigen::Index n = rep.hilbert_dim;
    const bool complex_scalar = a.scalar_field == ScalarField::Complex;
    auto realified = [&](const Matrix& e) {
      Eigen::MatrixXd r(2 * n, 2 * n);
      r << e.real(), -e.imag(), e.imag(), e.real();
      return r;
    };
    const Eigen::Index m = static_cast<Eigen::Index>(rep.images.size());
    if (complex_scalar) {
      Matrix cols(n * n * n * n, m);
      for (Eigen::Index k = 0; k < m; ++k) {
        const Matrix t =
            tensor(rep.images[k], identity(n)) - tensor(identity(n), rep.images[k]);
        Eigen::Index idx = 0;
        for (Eigen::Index jj = 0; jj < t.cols(); ++jj)
          for (Eigen::Index ii = 0; ii < t.rows(); ++ii) cols(idx++, k) = t(ii, jj);
      }
      Eigen::JacobiSVD<Matrix> svd(cols);
      const auto& sv = svd.singularValues();
      int nullity = 0;
      for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) <= 1e-8 * sv(0)) ++nullity;
      return nullity + static_cast<int>(m - sv.size());
    }
    const Eigen::Index nr = 2 * n;
    Eigen::MatrixXd cols(nr * nr * nr * nr, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      const Eigen::MatrixXd e = realified(rep.images[k]);
      Eigen::MatrixXd t = Eigen::kroneckerProduct(e, Eigen::MatrixXd::Identity(nr, nr)) -
                          Eigen::kroneckerProduct(Eigen::MatrixXd::Identity(nr, nr), e);
      cols.col(k) = Eigen::Map<Eigen::VectorXd>(t.data(), t.size());
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols);
    const auto& sv = svd.singularValues();
    int nullity = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) <= 1e-8 * sv(0)) ++nullity;
    return nullity + static_cast<int>(m - sv.size());
  };

  for (const auto& a : {make({{1, C}, {1, C}}, ScalarField::Complex),
                        make({{2, C}}, ScalarField::Complex),
                        make({{1, C}}, ScalarField::Real),
                        make({{1, H}}, ScalarField::Real),
                        make({{2, R}, {1, C}}, ScalarField::Real)}) {
    CHECK(dense_nullity(a) == diagonal_center_dimension(a));
    CHECK(diagonal_center_dimension(a) == 1);
  }
}

TEST_CASE("star index") {
  const auto a = make({{2, C}}, ScalarField::Real);
  const auto basis = standard_basis(a);
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    const auto [sk, sign] = star_index(a, k);
    CHECK(basis[sk].p == basis[k].q);
    CHECK(basis[sk].q == basis[k].p);
    CHECK(sign == (basis[k].unit == 0 ? 1.0 : -1.0));
  }
}

TEST_CASE("coefficients_of round trip") {
  std::mt19937_64 rng(7);
  const auto a = make({{2, C}, {1, C}}, ScalarField::Complex);
  const Representation rep = Representation::canonical(a);
  Vector coeffs(rep.images.size());
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) = Complex(random_gaussian(rng, 1)(0, 0));
  double resid = 1.0;
  const Vector back = rep.coefficients_of(rep.materialize(coeffs), &resid);
  CHECK(resid < 1e-12);
  CHECK((back - coeffs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("tensor algebra pairing and images") {
  const auto a = make({{1, C}, {1, C}}, ScalarField::Complex);
  const auto b = make({{2, C}}, ScalarField::Complex);
  const auto tensored = tensor_algebra(a, b);
  REQUIRE(tensored.algebra.factors.size() == 2);
  CHECK(tensored.algebra.factors[0].size == 2);
  CHECK(tensored.index_pairs.size() == standard_basis(tensored.algebra).size());
  CHECK(tensored.index_pairs.size() == 8);

  const Representation ra = Representation::canonical(a);
  const Representation rb = Representation::canonical(b);
  const Representation rab = tensor_representation(ra, rb);
  CHECK_NOTHROW(rab.validate());
  CHECK(rab.hilbert_dim == ra.hilbert_dim * rb.hilbert_dim);
}

TEST_CASE("tensor over R requires a real side per factor pair") {
  const auto cr = make({{1, C}}, ScalarField::Real);
  CHECK_THROWS_AS(tensor_algebra(cr, cr), std::invalid_argument);

  const auto rr = make({{1, R}, {1, R}}, ScalarField::Real);
  const auto mixed = tensor_algebra(rr, cr);
  CHECK(mixed.algebra.factors.size() == 2);
  CHECK(mixed.algebra.factors[0].field == C);
  CHECK(standard_basis(mixed.algebra).size() == 4);  // two copies of {1, i}
}

TEST_CASE("realify doubles the basis and stays valid") {
  const auto a = make({{2, C}}, ScalarField::Complex);
  const Representation rep = Representation::canonical(a);
  const Representation real_rep = realify(rep);
  CHECK(real_rep.images.size() == 2 * rep.images.size());
  CHECK_NOTHROW(real_rep.validate());
}

TEST_CASE("mixed-scalar tensor representation validates") {
  const Representation rr =
      Representation::canonical(make({{1, R}, {1, R}}, ScalarField::Real));
  const Representation cc =
      Representation::canonical(make({{1, C}, {1, C}}, ScalarField::Complex));
  const Representation mixed = tensor_representation(rr, cc);
  CHECK(mixed.algebra.scalar_field == ScalarField::Real);
  CHECK_NOTHROW(mixed.validate());
  CHECK(mixed.hilbert_dim == 4);
  CHECK(mixed.images.size() == 2 * 4);
}
