#pragma once

#include <json.hpp>
#include <string>

#include "realeig/constructor.hpp"
#include "realeig/poly.hpp"
#include "realeig/solver.hpp"
#include "realeig/tensor.hpp"

namespace realeig::io {

using nlohmann::json;

// {"n_vars": n, "degree": d, "terms": [{"exps": [...], "coef": c}, ...]},
// terms in graded lexicographic order.
json to_json(const HomogeneousPolynomial& f);
HomogeneousPolynomial polynomial_from_json(const json& j);

// {"order": d, "dim": n, "entries": [{"idx": [i_1 <= ... <= i_d], "value": v}]},
// one-based indices, keys in lexicographic order.
json to_json(const SymmetricTensor& a);
SymmetricTensor tensor_from_json(const json& j);

json to_json(const SolveReport& r);
SolveReport report_from_json(const json& j);

json to_json(const ConstructionResult& r);
ConstructionResult construction_from_json(const json& j);

/// What a CLI input file turned out to contain. Polynomial documents, tensor
/// documents and construction results (last level) are all accepted.
struct LoadedInput {
  enum class Kind { polynomial, tensor, construction } kind;
  HomogeneousPolynomial polynomial{1, 0};
};

/// Throws ParseError on unreadable or malformed input.
LoadedInput load_input(const std::string& path);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace realeig::io
