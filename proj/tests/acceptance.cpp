// Acceptance suite: one line per criterion, exit code = number of failures.
//
//  1. sign-table fidelity (exact fixtures)
//  2. KO additivity over all extended label pairs and both variants
//  3. Wedderburn diagonal-center sweep (<= 4 factors, sizes <= 3, R and C)
//  4. J-fixed base recovery on products B x F
//  5. J-compatible splitting on random Hermitian operators
//  6. fluctuation closure on random one-forms
//  7. toggle involution on all even catalog triples
//  8. alternative even-even Dirac spectra
//
// Run as `ctest -R acceptance` or directly: build/tests/spectre_acceptance

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "spectre/catalog.hpp"
#include "spectre/fluctuation.hpp"
#include "spectre/product.hpp"
#include "test_support.hpp"

using namespace spectre;
using namespace spectre::testing;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, const char* title) : number_(number), title_(title) {
    start_ = std::chrono::steady_clock::now();
  }

  void expect(bool ok, const char* what) {
    if (!ok) {
      ok_ = false;
      std::printf("       criterion %d violated: %s\n", number_, what);
    }
  }

  ~Criterion() {
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok_ ? "PASS" : "FAIL", number_, title_,
                elapsed);
    if (!ok_) ++failures;
  }

 private:
  int number_;
  const char* title_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------- 1
void criterion_sign_tables() {
  Criterion c(1, "sign tables match the printed fixtures exactly");
  // conventional table: 8 columns of (eps, eps'), eps'' on even columns and
  // the suppressed eps'' = +1 convention on odd ones (24 entries)
  const int eps[8] = {+1, +1, -1, -1, -1, -1, +1, +1};
  const int epsp[8] = {+1, -1, +1, +1, +1, -1, +1, +1};
  const int epspp[8] = {+1, +1, -1, +1, +1, +1, -1, +1};  // odd entries suppressed = +1
  int checked = 0;
  for (int n = 0; n < 8; ++n) {
    const KOLabel label{n, n % 2 == 0 ? Variant::Plus : Variant::None};
    const SignTriple s = sign_table(label);
    c.expect(s.eps == eps[n], "conventional eps");
    c.expect(s.eps_prime == epsp[n], "conventional eps'");
    checked += 2;
    if (n % 2 == 0) {
      c.expect(s.eps_double_prime && *s.eps_double_prime == epspp[n], "conventional eps''");
      ++checked;
    } else {
      c.expect(!s.eps_double_prime.has_value(), "odd eps'' must be suppressed");
      ++checked;  // the suppressed +1 convention
    }
  }
  // extended table: 12 columns (32 printed entries)
  struct Column {
    const char* label;
    int e, ep, epp;  // epp = 0 when absent
  };
  const Column cols[12] = {{"0+", +1, +1, +1}, {"0-", +1, -1, +1}, {"1", +1, -1, 0},
                           {"2+", -1, +1, -1}, {"2-", +1, -1, -1}, {"3", -1, +1, 0},
                           {"4+", -1, +1, +1}, {"4-", -1, -1, +1}, {"5", -1, -1, 0},
                           {"6+", +1, +1, -1}, {"6-", -1, -1, -1}, {"7", +1, +1, 0}};
  for (const Column& col : cols) {
    const SignTriple s = sign_table(KOLabel::parse(col.label));
    c.expect(s.eps == col.e, "extended eps");
    c.expect(s.eps_prime == col.ep, "extended eps'");
    checked += 2;
    if (col.epp != 0) {
      c.expect(s.eps_double_prime && *s.eps_double_prime == col.epp, "extended eps''");
      ++checked;
    }
  }
  c.expect(checked == 24 + 32, "entry count");
  // exotic columns relate to conventional ones by (eps eps'', -eps', eps'')
  for (int n : {0, 2, 4, 6}) {
    const SignTriple plus = sign_table({n, Variant::Plus});
    const SignTriple minus = sign_table({n, Variant::Minus});
    c.expect(minus.eps == plus.eps * *plus.eps_double_prime, "exotic eps relation");
    c.expect(minus.eps_prime == -plus.eps_prime, "exotic eps' relation");
    c.expect(*minus.eps_double_prime == *plus.eps_double_prime, "exotic eps'' relation");
  }
}

// ---------------------------------------------------------------------- 2
void criterion_ko_additivity() {
  Criterion c(2, "KO additivity across all 144 label pairs, both variants");
  const Tolerance tol{1e-9, 0.0};
  for (const KOLabel& l1 : all_labels())
    for (const KOLabel& l2 : all_labels())
      for (int variant : {+1, -1}) {
        const RealSpectralTriple t1 = one_point(l1);
        const RealSpectralTriple t2 = one_point(l2);
        ProductOptions opts;
        opts.variant = variant;
        const RealSpectralTriple p = product(t1, t2, opts);
        const int n = (l1.n + l2.n) % 8;
        c.expect(p.ko.n == n, "product KO dimension is n1 + n2 mod 8");
        const AxiomReport report = verify(p, tol);
        c.expect(report.pass(), "product verifies at 1e-9");
        bool matches_column = false;
        for (const KOLabel& m : infer_ko(p, tol)) matches_column |= m.n == n;
        c.expect(matches_column, "measured signs match a column of dimension n1 + n2");
      }
}

// ---------------------------------------------------------------------- 3
void criterion_wedderburn() {
  Criterion c(3, "diagonal centre is K 1 for every algebra up to 4 factors of size 3");
  int swept = 0;
  // complex scalar field: factor = size only
  {
    std::vector<std::vector<int>> stack{{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& prefix : stack)
        for (int size = 1; size <= 3; ++size) {
          auto sizes = prefix;
          sizes.push_back(size);
          next.push_back(sizes);
        }
      for (const auto& sizes : next) {
        StructuredAlgebra a;
        a.scalar_field = ScalarField::Complex;
        for (int size : sizes) a.factors.push_back({size, FactorField::Complex});
        const auto basis = diagonal_center(a);
        c.expect(basis.size() == 1, "complex scalar: nullspace dimension 1");
        if (basis.size() == 1) {
          const Representation rep = Representation::canonical(a);
          c.expect(real_span_contains(basis, rep.unit_coefficients(), 1e-8),
                   "complex scalar: unit spans the centre");
        }
        ++swept;
      }
      stack = next;
    }
  }
  // real scalar field: factor = (size, field) with fields R, C, H
  {
    using F = std::pair<int, FactorField>;
    std::vector<F> options;
    for (int size = 1; size <= 3; ++size)
      for (FactorField f : {FactorField::Real, FactorField::Complex, FactorField::Quaternion})
        options.push_back({size, f});
    std::vector<std::vector<F>> stack{{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<std::vector<F>> next;
      for (const auto& prefix : stack)
        for (const F& opt : options) {
          auto factors = prefix;
          factors.push_back(opt);
          next.push_back(factors);
        }
      for (const auto& factors : next) {
        StructuredAlgebra a;
        a.scalar_field = ScalarField::Real;
        for (const auto& [size, field] : factors) a.factors.push_back({size, field});
        const int dim = diagonal_center_dimension(a);
        c.expect(dim == 1, "real scalar: nullspace dimension 1");
        ++swept;
      }
      stack = next;
    }
  }
  c.expect(swept == 120 + 7380, "sweep covers every algebra");
}

// ---------------------------------------------------------------------- 4
void criterion_base_recovery() {
  Criterion c(4, "J-fixed subalgebra of B x F recovers B tensor 1");
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<int> pick_dim(2, 4);
  std::uniform_real_distribution<double> uniform(-2.0, 2.0);
  const auto& labels = all_labels();
  std::uniform_int_distribution<size_t> pick_label(0, labels.size() - 1);
  std::uniform_int_distribution<int> pick_kind(0, 2);

  for (int instance = 0; instance < 50; ++instance) {
    const int dim_b = pick_dim(rng);
    std::vector<double> diag(dim_b);
    for (double& d : diag) d = uniform(rng);
    const RealSpectralTriple base = diagonal_real_commutative(diag);

    // random finite fiber: a unitary-conjugated catalog triple
    RealSpectralTriple fiber = [&]() {
      switch (pick_kind(rng)) {
        case 0: return one_point(labels[pick_label(rng)]);
        case 1: return two_point(1.0 + std::abs(uniform(rng)));
        default:
          return product(one_point(labels[pick_label(rng)]), one_point(labels[pick_label(rng)]),
                         {});
      }
    }();
    fiber = conjugated(fiber, random_unitary(rng, fiber.hilbert_dim()));
    fiber.dirac *= 1.0 + std::abs(uniform(rng));

    const RealSpectralTriple prod = product(base, fiber, {});
    const auto fixed = j_fixed_subalgebra(prod, /*star=*/false);
    c.expect(static_cast<int>(fixed.size()) == dim_b, "fixed-set dimension equals dim B");

    // span match in both directions: e_i (x) 1 lies in the fixed set and
    // every fixed element lies in span{e_i (x) 1}
    std::vector<Vector> expected;
    bool expansion_exact = true;
    for (int i = 0; i < dim_b; ++i) {
      Matrix e_ii = Matrix::Zero(dim_b, dim_b);
      e_ii(i, i) = 1.0;
      const Matrix on_product = tensor(e_ii, identity(prod.hilbert_dim() / dim_b));
      double resid = 1.0;
      expected.push_back(prod.rep.coefficients_of(on_product, &resid));
      expansion_exact = expansion_exact && resid < 1e-10;
    }
    c.expect(expansion_exact, "e_i tensor 1 lies in the product algebra");
    bool both_ways = true;
    for (const auto& v : expected) both_ways = both_ways && real_span_contains(fixed, v, 1e-8);
    for (const auto& v : fixed) both_ways = both_ways && real_span_contains(expected, v, 1e-8);
    c.expect(both_ways, "fixed set spans exactly B tensor 1");
  }
}

// ---------------------------------------------------------------------- 5
void criterion_split() {
  Criterion c(5, "J-compatible splitting on random Hermitian operators");
  std::mt19937_64 rng(0xD15C);
  const auto& labels = all_labels();
  std::uniform_int_distribution<size_t> pick_label(0, labels.size() - 1);
  std::uniform_int_distribution<int> pick_dim(1, 4);

  std::uniform_int_distribution<int> pick_odd(1, 3);
  for (int instance = 0; instance < 100; ++instance) {
    const KOLabel label = labels[pick_label(rng)];
    const SignTriple signs = sign_table(label);
    // catalog-style J on dimension 2..8: conjugation (any dimension), or the
    // symplectic block form when eps = -1 (even dimensions only)
    int dim;
    Matrix u;
    if (signs.eps == +1) {
      dim = 2 * pick_dim(rng) + (instance % 2 ? 0 : pick_odd(rng) % 2);
      dim = std::min(dim, 8);
      u = identity(dim);
    } else {
      const int half = pick_dim(rng);
      dim = 2 * half;
      u = tensor(identity(half), Matrix(Complex(0, 1) * sigma(2)));
    }
    const Antiunitary j(u);
    const Matrix d = random_hermitian(rng, dim);
    const double scale = std::max(1.0, max_abs(d));

    const SplitResult split = j_compatible_split(d, j, signs);
    c.expect(split.resid_d0 <= 1e-10, "d0 J = eps' J d0 within 1e-10");
    c.expect(split.resid_m <= 1e-10, "m J = -eps' J m within 1e-10");
    c.expect(max_abs(split.d0 + split.m - d) <= 1e-12 * scale, "d0 + m = d");

    const SplitResult again = j_compatible_split(split.d0, j, signs);
    c.expect(max_abs(again.m) <= 1e-12 * scale, "re-split of d0 has no endomorphism part");

    // uniqueness: the independent eigenspace-projection route gives the same m
    const Matrix involution = static_cast<double>(signs.eps_prime) * j.conjugate(d);
    const Matrix m_other = 0.5 * (d - involution);
    c.expect(max_abs(m_other - split.m) <= 1e-10 * scale, "any valid split agrees");
  }
}

// ---------------------------------------------------------------------- 6
void criterion_fluctuation() {
  Criterion c(6, "fluctuation closure on random one-forms");
  std::mt19937_64 rng(0xF1AC);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::vector<RealSpectralTriple> hosts = {
      two_point(),
      product(two_point(), one_point(KOLabel::parse("1")), {}),
      product(two_point(), one_point(KOLabel::parse("6-")), {}),
      product(one_point(KOLabel::parse("3")), two_point(), {}),
  };
  const Tolerance tol{1e-9, 0.0};

  for (int instance = 0; instance < 100; ++instance) {
    const RealSpectralTriple& host = hosts[instance % hosts.size()];
    std::vector<CoefficientPair> pairs;
    const Eigen::Index m = static_cast<Eigen::Index>(host.rep.images.size());
    for (int term = 0; term < 2; ++term) {
      Vector a(m), b(m);
      for (Eigen::Index i = 0; i < m; ++i) {
        a(i) = Complex(gauss(rng), gauss(rng));
        b(i) = Complex(gauss(rng), gauss(rng));
      }
      pairs.emplace_back(a, b);
    }
    const OneForm one = symmetrized(host, one_form(host, pairs));
    const RealSpectralTriple fluct = fluctuate(host, one, tol);
    c.expect(verify(fluct, tol).pass(), "fluctuated triple passes the axiom report at 1e-9");

    bool keeps_label = false;
    for (const KOLabel& l : infer_ko(fluct, tol)) keeps_label |= l == host.ko;
    c.expect(keeps_label, "declared KO label preserved");

    const RealSpectralTriple back = fluctuate(fluct, one.negated(), tol);
    const double scale = std::max(1.0, max_abs(host.dirac));
    c.expect(max_abs(back.dirac - host.dirac) <= 1e-12 * scale,
             "double fluctuation by (A, -A) restores D");
  }
}

// ---------------------------------------------------------------------- 7
void criterion_toggle() {
  Criterion c(7, "toggle involution on all even catalog triples");
  std::vector<RealSpectralTriple> evens;
  for (const KOLabel& label : all_labels())
    if (label.even()) evens.push_back(one_point(label));
  evens.push_back(two_point());

  for (const RealSpectralTriple& t : evens) {
    const RealSpectralTriple flipped = toggle(t);
    c.expect(flipped.ko.n == t.ko.n && flipped.ko.variant != t.ko.variant,
             "toggle swaps the variant label");
    c.expect(verify(flipped).pass(), "toggled triple verifies under the flipped column");

    const RealSpectralTriple back = toggle(flipped);
    c.expect(back.ko == t.ko, "double toggle restores the label");
    c.expect(max_abs(back.dirac - t.dirac) <= 1e-12, "double toggle preserves D");
    c.expect(max_abs(*back.grading - *t.grading) <= 1e-12, "double toggle preserves gamma");
    c.expect(max_abs(back.real_structure.unitary_part() - t.real_structure.unitary_part()) <=
                 1e-12,
             "double toggle preserves J");
  }
}

// ---------------------------------------------------------------------- 8
void criterion_alt_dirac() {
  Criterion c(8, "alternative even-even Dirac operators are isospectral");
  std::mt19937_64 rng(0xA17D);
  std::uniform_int_distribution<int> pick_half(1, 3);
  for (int instance = 0; instance < 50; ++instance) {
    const int d1 = 2 * pick_half(rng), d2 = 2 * pick_half(rng);
    auto [dirac1, grading1] = random_even_pair(rng, d1);
    auto [dirac2, grading2] = random_even_pair(rng, d2);
    const Matrix standard = tensor(dirac1, identity(d2)) + tensor(grading1, dirac2);
    const Matrix alternative = tensor(dirac1, grading2) + tensor(identity(d1), dirac2);
    const auto ev1 = eigenvalues_hermitian(standard);
    const auto ev2 = eigenvalues_hermitian(alternative);
    bool agree = ev1.size() == ev2.size();
    for (size_t k = 0; agree && k < ev1.size(); ++k) agree = std::abs(ev1[k] - ev2[k]) <= 1e-9;
    c.expect(agree, "spectra agree as multisets to 1e-9");
  }
}

}  // namespace

int main() {
  criterion_sign_tables();
  criterion_ko_additivity();
  criterion_wedderburn();
  criterion_base_recovery();
  criterion_split();
  criterion_fluctuation();
  criterion_toggle();
  criterion_alt_dirac();
  std::printf("%s: %d/8 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              8 - failures);
  return failures;
}
