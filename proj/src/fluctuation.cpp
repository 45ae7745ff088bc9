#include "spectre/fluctuation.hpp"

#include <cmath>

namespace spectre {

OneForm OneForm::negated() const {
  OneForm out;
  out.matrix = -matrix;
  out.terms.reserve(terms.size());
  for (const auto& [a, b] : terms) out.terms.emplace_back(-a, b);
  return out;
}

OneForm one_form(const RealSpectralTriple& t, const std::vector<CoefficientPair>& pairs) {
  OneForm out;
  out.terms = pairs;
  out.matrix = Matrix::Zero(t.hilbert_dim(), t.hilbert_dim());
  for (const auto& [ac, bc] : pairs) {
    const Matrix a = t.rep.materialize(ac);
    const Matrix b = t.rep.materialize(bc);
    out.matrix += a * (t.dirac * b - b * t.dirac);
  }
  return out;
}

OneForm symmetrized(const RealSpectralTriple& t, const OneForm& a) {
  std::vector<CoefficientPair> terms;
  const Vector unit = t.rep.unit_coefficients();
  for (const auto& [ac, bc] : a.terms) {
    terms.emplace_back(0.5 * ac, bc);
    // adjoint term: (a[D,b])^dag = b*[D,a*] - [D, b* a*]
    Vector a_star = Vector::Zero(ac.size());
    Vector b_star = Vector::Zero(bc.size());
    for (Eigen::Index k = 0; k < ac.size(); ++k) {
      const auto [si, sign] = star_index(t.rep.algebra, static_cast<int>(k));
      a_star(si) += sign * std::conj(ac(k));
      b_star(si) += sign * std::conj(bc(k));
    }
    const Matrix ba = t.rep.materialize(b_star) * t.rep.materialize(a_star);
    double resid = 0.0;
    const Vector ba_coeffs = t.rep.coefficients_of(ba, &resid);
    if (resid > 1e-9)
      throw std::runtime_error("symmetrized: product b* a* does not lie in the algebra span");
    terms.emplace_back(0.5 * b_star, a_star);
    terms.emplace_back(-0.5 * unit, ba_coeffs);
  }
  OneForm out = one_form(t, terms);
  const double herm_gap = max_abs(out.matrix - Matrix(0.5 * (a.matrix + a.matrix.adjoint())));
  if (herm_gap > 1e-8 * std::max(1.0, max_abs(out.matrix)))
    throw std::runtime_error("symmetrized: rebuilt one-form does not match (A + A^dag)/2");
  return out;
}

RealSpectralTriple fluctuate(const RealSpectralTriple& t, const OneForm& a, const Tolerance& tol) {
  if (!a.hermitian(tol))
    throw std::invalid_argument(
        "fluctuate: one-form is not Hermitian; symmetrize explicitly if that is intended");
  const SignTriple signs = sign_table(t.ko);
  RealSpectralTriple out = t;
  out.dirac = t.dirac + a.matrix +
              static_cast<double>(signs.eps_prime) * t.real_structure.conjugate(a.matrix);
  const AxiomReport report = verify(out, tol);
  if (!report.pass()) {
    std::string broken;
    for (const auto& c : report.checks)
      if (!c.pass) broken += (broken.empty() ? "" : ", ") + c.name;
    throw std::runtime_error("fluctuate: result fails verification (" + broken +
                             "); invalid input one-form");
  }
  return out;
}

Matrix finite_fluct_components(const RealSpectralTriple& t,
                               const std::vector<CoefficientPair>& pairs) {
  Matrix phi = Matrix::Zero(t.hilbert_dim(), t.hilbert_dim());
  for (const auto& [ac, bc] : pairs) {
    const Matrix a = t.rep.materialize(ac);
    const Matrix b = t.rep.materialize(bc);
    const Matrix ao = opposite_action(t, ac);
    const Matrix bo = opposite_action(t, bc);
    phi += a * (t.dirac * b - b * t.dirac);
    phi -= (t.dirac * bo - bo * t.dirac) * ao;
  }
  return phi;
}

SplitResult j_compatible_split(const Matrix& d, const Antiunitary& j, const SignTriple& signs,
                               const Tolerance& tol) {
  require_square(d, "j_compatible_split");
  if (d.rows() != j.dim()) throw std::invalid_argument("j_compatible_split: dimension mismatch");
  if (!is_hermitian(d, tol))
    throw std::invalid_argument("j_compatible_split: d must be Hermitian");
  const Matrix jsq = j.square();
  if (max_abs(jsq - Matrix(static_cast<double>(signs.eps) * identity(d.rows()))) >
      tol.threshold(1.0))
    throw std::invalid_argument("j_compatible_split: J^2 != eps I for the declared signs");

  const double ep = signs.eps_prime;
  SplitResult out;
  out.m = 0.5 * (d - ep * j.conjugate(d));
  out.d0 = d - out.m;
  const Matrix& u = j.unitary_part();
  const double scale = std::max(1.0, max_abs(d));
  out.resid_d0 = max_abs(Matrix(out.d0 * u) - Matrix(ep * u * out.d0.conjugate())) / scale;
  out.resid_m = max_abs(Matrix(out.m * u) + Matrix(ep * u * out.m.conjugate())) / scale;
  return out;
}

double spectral_action(const RealSpectralTriple& t, double cutoff_scale,
                       const std::vector<std::pair<int, double>>& weights) {
  if (!(cutoff_scale > 0)) throw std::invalid_argument("spectral_action: cutoff must be positive");
  const std::vector<double> eigenvalues = eigenvalues_hermitian(t.dirac);
  double total = 0.0;
  for (double lambda : eigenvalues) {
    if (std::abs(lambda) > cutoff_scale) continue;
    const double x = lambda / cutoff_scale;
    for (const auto& [power, coeff] : weights)
      total += coeff * (power == 0 ? 1.0 : std::pow(x * x, power));
  }
  return total;
}

}  // namespace spectre
