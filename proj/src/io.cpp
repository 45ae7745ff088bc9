#include "spectre/io.hpp"

#include <fstream>

namespace spectre {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2)
        throw std::invalid_argument("matrix: entries must be [re, im]");
      m(i, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  if (!all_finite(m)) throw std::invalid_argument("matrix: non-finite entries");
  return m;
}

Json coefficients_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(Json::array({v(i).real(), v(i).imag()}));
  return out;
}

Vector coefficients_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficients: expected array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Json& entry = j.at(i);
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("coefficients: entries must be [re, im]");
    v(i) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
  }
  return v;
}

namespace {

std::string field_name(FactorField f) {
  switch (f) {
    case FactorField::Real: return "real";
    case FactorField::Complex: return "complex";
    case FactorField::Quaternion: return "quaternion";
  }
  return "complex";
}

FactorField field_from(const std::string& s) {
  if (s == "real") return FactorField::Real;
  if (s == "complex") return FactorField::Complex;
  if (s == "quaternion") return FactorField::Quaternion;
  throw std::invalid_argument("algebra: unknown factor field '" + s + "'");
}

}  // namespace

Json algebra_to_json(const StructuredAlgebra& a) {
  Json out;
  out["scalar_field"] = a.scalar_field == ScalarField::Complex ? "complex" : "real";
  Json factors = Json::array();
  for (const auto& f : a.factors)
    factors.push_back(Json{{"size", f.size}, {"field", field_name(f.field)}});
  out["factors"] = std::move(factors);
  return out;
}

StructuredAlgebra algebra_from_json(const Json& j) {
  StructuredAlgebra a;
  const std::string scalar = j.at("scalar_field").get<std::string>();
  if (scalar == "complex")
    a.scalar_field = ScalarField::Complex;
  else if (scalar == "real")
    a.scalar_field = ScalarField::Real;
  else
    throw std::invalid_argument("algebra: unknown scalar field '" + scalar + "'");
  for (const Json& f : j.at("factors"))
    a.factors.push_back({f.at("size").get<int>(), field_from(f.at("field").get<std::string>())});
  a.validate();
  return a;
}

Json ko_to_json(const KOLabel& label) {
  Json out{{"n", label.n}};
  if (label.variant == Variant::Plus) out["variant"] = "plus";
  if (label.variant == Variant::Minus) out["variant"] = "minus";
  return out;
}

KOLabel ko_from_json(const Json& j) {
  KOLabel label;
  label.n = j.at("n").get<int>();
  if (j.contains("variant")) {
    const std::string v = j.at("variant").get<std::string>();
    if (v == "plus")
      label.variant = Variant::Plus;
    else if (v == "minus")
      label.variant = Variant::Minus;
    else
      throw std::invalid_argument("ko: unknown variant '" + v + "'");
  } else {
    label.variant = Variant::None;
  }
  label.validate();
  return label;
}

Json triple_to_json(const RealSpectralTriple& t) {
  Json out;
  out["hilbert_dim"] = t.hilbert_dim();
  out["algebra"] = algebra_to_json(t.rep.algebra);
  Json images = Json::array();
  for (const auto& img : t.rep.images) images.push_back(matrix_to_json(img));
  out["images"] = std::move(images);
  out["dirac"] = matrix_to_json(t.dirac);
  if (t.grading) out["grading"] = matrix_to_json(*t.grading);
  out["real_structure_unitary"] = matrix_to_json(t.real_structure.unitary_part());
  out["ko"] = ko_to_json(t.ko);
  return out;
}

namespace {

Representation rep_from_json(const Json& j) {
  Representation rep;
  rep.algebra = algebra_from_json(j.at("algebra"));
  rep.hilbert_dim = j.at("hilbert_dim").get<int>();
  for (const Json& img : j.at("images")) rep.images.push_back(matrix_from_json(img));
  const size_t expected = standard_basis(rep.algebra).size();
  if (rep.images.size() != expected)
    throw std::invalid_argument("triple: expected " + std::to_string(expected) +
                                " representation images, got " + std::to_string(rep.images.size()));
  return rep;
}

}  // namespace

RealSpectralTriple triple_from_json(const Json& j) {
  Representation rep = rep_from_json(j);
  Matrix dirac = matrix_from_json(j.at("dirac"));
  std::optional<Matrix> grading;
  if (j.contains("grading")) grading = matrix_from_json(j.at("grading"));
  Antiunitary real_structure(matrix_from_json(j.at("real_structure_unitary")));
  KOLabel ko = ko_from_json(j.at("ko"));
  RealSpectralTriple t{std::move(rep), std::move(dirac), std::move(grading),
                       std::move(real_structure), ko};
  t.validate_shapes();
  return t;
}

TripleData triple_data_from_json(const Json& j) {
  TripleData data{rep_from_json(j), matrix_from_json(j.at("dirac")), std::nullopt, std::nullopt};
  if (j.contains("grading")) data.grading = matrix_from_json(j.at("grading"));
  if (j.contains("ko")) data.ko = ko_from_json(j.at("ko"));
  return data;
}

Json report_to_json(const AxiomReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"name", c.name},
                          {"residual", c.residual},
                          {"threshold", c.threshold},
                          {"pass", c.pass}});
  return Json{{"checks", std::move(checks)}, {"pass", report.pass()}};
}

std::vector<CoefficientPair> pairs_from_json(const Json& j) {
  std::vector<CoefficientPair> out;
  for (const Json& entry : j)
    out.emplace_back(coefficients_from_json(entry.at("a")), coefficients_from_json(entry.at("b")));
  return out;
}

Json pairs_to_json(const std::vector<CoefficientPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs)
    out.push_back(Json{{"a", coefficients_to_json(a)}, {"b", coefficients_to_json(b)}});
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

void save_triple(const RealSpectralTriple& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << canonical_dump(triple_to_json(t));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

RealSpectralTriple load_triple(const std::string& path) { return triple_from_json(load_json(path)); }

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

}  // namespace spectre
