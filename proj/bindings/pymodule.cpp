#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectre/catalog.hpp"
#include "spectre/fluctuation.hpp"
#include "spectre/io.hpp"
#include "spectre/product.hpp"

namespace py = pybind11;
using namespace spectre;

namespace {

StructuredAlgebra algebra_from_spec(const std::vector<std::pair<int, std::string>>& factors,
                                    const std::string& scalar) {
  StructuredAlgebra a;
  a.scalar_field = scalar == "real" ? ScalarField::Real : ScalarField::Complex;
  for (const auto& [size, field] : factors) {
    FactorField f = FactorField::Complex;
    if (field == "real") f = FactorField::Real;
    if (field == "quaternion") f = FactorField::Quaternion;
    a.factors.push_back({size, f});
  }
  a.validate();
  return a;
}

py::dict report_to_dict(const AxiomReport& report) {
  py::list checks;
  for (const auto& c : report.checks) {
    py::dict d;
    d["name"] = c.name;
    d["residual"] = c.residual;
    d["threshold"] = c.threshold;
    d["pass"] = c.pass;
    checks.append(d);
  }
  py::dict out;
  out["checks"] = checks;
  out["pass"] = report.pass();
  return out;
}

std::vector<CoefficientPair> pairs_from_py(const std::vector<std::pair<Vector, Vector>>& pairs) {
  std::vector<CoefficientPair> out;
  for (const auto& [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

}  // namespace

PYBIND11_MODULE(_spectre, m) {
  m.doc() = "finite real spectral triples: sign tables, products, inner fluctuations";

  py::class_<RealSpectralTriple>(m, "Triple")
      .def_property_readonly("hilbert_dim", &RealSpectralTriple::hilbert_dim)
      .def_property_readonly("dirac", [](const RealSpectralTriple& t) { return t.dirac; })
      .def_property_readonly("grading",
                             [](const RealSpectralTriple& t) -> py::object {
                               if (!t.grading) return py::none();
                               return py::cast(*t.grading);
                             })
      .def_property_readonly(
          "real_structure_unitary",
          [](const RealSpectralTriple& t) { return t.real_structure.unitary_part(); })
      .def_property_readonly("images",
                             [](const RealSpectralTriple& t) { return t.rep.images; })
      .def_property_readonly("ko", [](const RealSpectralTriple& t) { return t.ko.str(); })
      .def("__repr__", [](const RealSpectralTriple& t) {
        return "<spectre.Triple KO " + t.ko.str() + ", hilbert_dim " +
               std::to_string(t.hilbert_dim()) + ">";
      });

  py::class_<OneForm>(m, "OneForm")
      .def_property_readonly("matrix", [](const OneForm& a) { return a.matrix; })
      .def("negated", &OneForm::negated)
      .def("hermitian", [](const OneForm& a) { return a.hermitian(); });

  m.def("sign_table", [](const std::string& label) {
    const SignTriple s = sign_table(KOLabel::parse(label));
    py::dict out;
    out["eps"] = s.eps;
    out["eps_prime"] = s.eps_prime;
    if (s.eps_double_prime) out["eps_double_prime"] = *s.eps_double_prime;
    return out;
  });
  m.def("all_labels", [] {
    std::vector<std::string> out;
    for (const auto& l : all_labels()) out.push_back(l.str());
    return out;
  });

  m.def("one_point", [](const std::string& label) { return one_point(KOLabel::parse(label)); },
        py::arg("label"));
  m.def("two_point", &two_point, py::arg("coupling") = 1.0);
  m.def("diagonal_real_commutative", &diagonal_real_commutative, py::arg("dirac_diagonal"));

  m.def("verify", [](const RealSpectralTriple& t) { return report_to_dict(verify(t)); });
  m.def("infer_ko", [](const RealSpectralTriple& t) {
    std::vector<std::string> out;
    for (const auto& l : infer_ko(t)) out.push_back(l.str());
    return out;
  });
  m.def("j_fixed_subalgebra",
        [](const RealSpectralTriple& t, bool star) { return j_fixed_subalgebra(t, star); },
        py::arg("triple"), py::arg("star") = true);
  m.def("opposite_action", &opposite_action, py::arg("triple"), py::arg("b_coeffs"));

  m.def("product",
        [](const RealSpectralTriple& a, const RealSpectralTriple& b, const std::string& variant,
           int cap) {
          ProductOptions opts;
          opts.variant = variant == "minus" ? -1 : +1;
          opts.dimension_cap = cap;
          return product(a, b, opts);
        },
        py::arg("left"), py::arg("right"), py::arg("variant") = "plus", py::arg("cap") = 4096);
  m.def("toggle", &toggle);
  m.def("alt_even_even_dirac", &alt_even_even_dirac);

  m.def("one_form",
        [](const RealSpectralTriple& t, const std::vector<std::pair<Vector, Vector>>& pairs) {
          return one_form(t, pairs_from_py(pairs));
        });
  m.def("symmetrized", &symmetrized);
  m.def("fluctuate",
        [](const RealSpectralTriple& t, const OneForm& a) { return fluctuate(t, a); });
  m.def("finite_fluct_components",
        [](const RealSpectralTriple& t, const std::vector<std::pair<Vector, Vector>>& pairs) {
          return finite_fluct_components(t, pairs_from_py(pairs));
        });
  m.def("j_compatible_split",
        [](const Matrix& d, const Matrix& u, const std::string& label) {
          const SplitResult r =
              j_compatible_split(d, Antiunitary(u), sign_table(KOLabel::parse(label)));
          return py::make_tuple(r.d0, r.m);
        },
        py::arg("dirac"), py::arg("real_structure_unitary"), py::arg("label"));
  m.def("spectral_action", &spectral_action, py::arg("triple"), py::arg("cutoff_scale"),
        py::arg("weights"));
  m.def("eigenvalues",
        [](const RealSpectralTriple& t) { return eigenvalues_hermitian(t.dirac); });

  m.def("tensor", &tensor);
  m.def("diagonal_center_dimension",
        [](const std::vector<std::pair<int, std::string>>& factors, const std::string& scalar) {
          return diagonal_center_dimension(algebra_from_spec(factors, scalar));
        },
        py::arg("factors"), py::arg("scalar_field") = "complex");

  m.def("search_real_structure",
        [](const RealSpectralTriple& t, const std::string& label, int budget, std::uint64_t seed) {
          SearchOptions opts;
          opts.budget = budget;
          opts.seed = seed;
          const SearchOutcome outcome = search_real_structure(
              t.rep, t.dirac, t.grading, KOLabel::parse(label), opts);
          std::vector<Matrix> out;
          for (const auto& s : outcome.solutions) out.push_back(s.unitary_part());
          return out;
        },
        py::arg("triple"), py::arg("label"), py::arg("budget") = 32,
        py::arg("seed") = std::uint64_t{0x5EED});

  m.def("load_triple", &load_triple);
  m.def("save_triple", &save_triple);
}
