#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "spectre/fluctuation.hpp"
#include "spectre/triple.hpp"

namespace spectre {

using Json = nlohmann::json;

/// Matrices serialize as arrays of rows, each entry a two-element [re, im]
/// array.  Round-trips are bit-exact for doubles.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json coefficients_to_json(const Vector& v);
Vector coefficients_from_json(const Json& j);

Json algebra_to_json(const StructuredAlgebra& a);
StructuredAlgebra algebra_from_json(const Json& j);

Json ko_to_json(const KOLabel& label);
KOLabel ko_from_json(const Json& j);

Json triple_to_json(const RealSpectralTriple& t);
RealSpectralTriple triple_from_json(const Json& j);

/// Triple file with the real structure not yet chosen (search-j input).
struct TripleData {
  Representation rep;
  Matrix dirac;
  std::optional<Matrix> grading;
  std::optional<KOLabel> ko;
};
TripleData triple_data_from_json(const Json& j);

Json report_to_json(const AxiomReport& report);

std::vector<CoefficientPair> pairs_from_json(const Json& j);
Json pairs_to_json(const std::vector<CoefficientPair>& pairs);

/// Canonical file form: two-space indentation plus trailing newline, keys
/// sorted.  save(load(f)) is byte-identical for files written by save.
std::string canonical_dump(const Json& j);
void save_triple(const RealSpectralTriple& t, const std::string& path);
RealSpectralTriple load_triple(const std::string& path);
Json load_json(const std::string& path);

}  // namespace spectre
