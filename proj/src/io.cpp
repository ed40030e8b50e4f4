#include "realeig/io.hpp"

#include <fstream>

#include "realeig/errors.hpp"

namespace realeig::io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

json point_to_json(const CriticalPoint& p) {
  return {{"x", p.x},
          {"value", p.value},
          {"lagrange_lambda", p.lagrange_lambda},
          {"morse_index", p.morse_index},
          {"nondegeneracy_margin", p.nondegeneracy_margin},
          {"residual", p.residual}};
}

CriticalPoint point_from_json(const json& j) {
  CriticalPoint p;
  p.x = get<std::vector<double>>(j, "x");
  p.value = get<double>(j, "value");
  p.lagrange_lambda = get<double>(j, "lagrange_lambda");
  p.morse_index = get<int>(j, "morse_index");
  p.nondegeneracy_margin = get<double>(j, "nondegeneracy_margin");
  p.residual = get<double>(j, "residual");
  return p;
}

}  // namespace

json to_json(const HomogeneousPolynomial& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exps", m.exps}, {"coef", c}});
  return {{"n_vars", f.n_vars()}, {"degree", f.degree()}, {"terms", terms}};
}

HomogeneousPolynomial polynomial_from_json(const json& j) {
  const int n = get<int>(j, "n_vars");
  const int d = get<int>(j, "degree");
  if (n < 1 || d < 0) throw ParseError("polynomial needs n_vars >= 1 and degree >= 0");
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  HomogeneousPolynomial f(n, d);
  for (const auto& t : terms) {
    Monomial m{get<std::vector<int>>(t, "exps")};
    try {
      f.add_term(m, get<double>(t, "coef"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("bad term: ") + e.what());
    }
  }
  return f;
}

json to_json(const SymmetricTensor& a) {
  json entries = json::array();
  for (const auto& [idx, v] : a.entries()) {
    std::vector<int> one_based(idx);
    for (auto& i : one_based) ++i;
    entries.push_back({{"idx", one_based}, {"value", v}});
  }
  return {{"order", a.order()}, {"dim", a.dim()}, {"entries", entries}};
}

SymmetricTensor tensor_from_json(const json& j) {
  const int order = get<int>(j, "order");
  const int dim = get<int>(j, "dim");
  if (order < 0 || dim < 1) throw ParseError("tensor needs order >= 0 and dim >= 1");
  const auto& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
  SymmetricTensor a(order, dim);
  for (const auto& e : entries) {
    auto idx = get<std::vector<int>>(e, "idx");
    if (!std::is_sorted(idx.begin(), idx.end()))
      throw ParseError("tensor keys must be sorted non-decreasing");
    for (auto& i : idx) --i;
    try {
      a.set(idx, get<double>(e, "value"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(std::string("bad tensor entry: ") + err.what());
    }
  }
  return a;
}

json to_json(const SolveReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(point_to_json(p));
  json degen = json::array();
  for (const auto& p : r.degenerate_points) degen.push_back(point_to_json(p));
  return {{"n_vars", r.n_vars},
          {"degree", r.degree},
          {"points", pts},
          {"degenerate_points", degen},
          {"expected_count", r.expected_count},
          {"found_count", r.found_count},
          {"euler_sum", r.euler_sum},
          {"certified", r.certified},
          {"degenerate_detected", r.degenerate_detected},
          {"continuum_suspected", r.continuum_suspected},
          {"total_starts", r.total_starts},
          {"converged_starts", r.converged_starts},
          {"diagnostics", r.diagnostics}};
}

SolveReport report_from_json(const json& j) {
  SolveReport r;
  r.n_vars = get<int>(j, "n_vars");
  r.degree = get<int>(j, "degree");
  for (const auto& p : field(j, "points")) r.points.push_back(point_from_json(p));
  for (const auto& p : field(j, "degenerate_points"))
    r.degenerate_points.push_back(point_from_json(p));
  r.expected_count = get<long>(j, "expected_count");
  r.found_count = get<long>(j, "found_count");
  r.euler_sum = get<int>(j, "euler_sum");
  r.certified = get<bool>(j, "certified");
  r.degenerate_detected = get<bool>(j, "degenerate_detected");
  r.continuum_suspected = get<bool>(j, "continuum_suspected");
  r.total_starts = get<int>(j, "total_starts");
  r.converged_starts = get<int>(j, "converged_starts");
  r.diagnostics = get<std::string>(j, "diagnostics");
  return r;
}

json to_json(const ConstructionResult& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    const auto& c = l.certificate;
    levels.push_back(
        {{"n", l.n},
         {"polynomial", to_json(l.polynomial)},
         {"tensor", to_json(l.tensor)},
         {"epsilon_used", l.epsilon_used ? json(*l.epsilon_used) : json(nullptr)},
         {"certificate",
          {{"count", c.count},
           {"expected", c.expected},
           {"min_margin", c.min_margin},
           {"max_residual", c.max_residual},
           {"euler_sum", c.euler_sum},
           {"index_census", c.index_census},
           {"certified", c.certified}}},
         {"report", to_json(l.report)}});
  }
  return {{"d", r.d}, {"n_target", r.n_target}, {"levels", levels}};
}

ConstructionResult construction_from_json(const json& j) {
  ConstructionResult r;
  r.d = get<int>(j, "d");
  r.n_target = get<int>(j, "n_target");
  const auto& levels = field(j, "levels");
  if (!levels.is_array()) throw ParseError("\"levels\" must be an array");
  for (const auto& lj : levels) {
    ConstructionLevel l;
    l.n = get<int>(lj, "n");
    l.polynomial = polynomial_from_json(field(lj, "polynomial"));
    l.tensor = tensor_from_json(field(lj, "tensor"));
    if (!field(lj, "epsilon_used").is_null()) l.epsilon_used = get<double>(lj, "epsilon_used");
    const auto& cj = field(lj, "certificate");
    auto& c = l.certificate;
    c.count = get<long>(cj, "count");
    c.expected = get<long>(cj, "expected");
    c.min_margin = get<double>(cj, "min_margin");
    c.max_residual = get<double>(cj, "max_residual");
    c.euler_sum = get<int>(cj, "euler_sum");
    c.index_census = get<std::vector<long>>(cj, "index_census");
    c.certified = get<bool>(cj, "certified");
    l.report = report_from_json(field(lj, "report"));
    r.levels.push_back(std::move(l));
  }
  return r;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

LoadedInput load_input(const std::string& path) {
  const auto j = read_json_file(path);
  if (!j.is_object()) throw ParseError(path + ": expected a JSON object");
  try {
    if (j.contains("levels")) {
      auto r = construction_from_json(j);
      if (r.levels.empty()) throw ParseError("construction has no levels");
      return {LoadedInput::Kind::construction, r.levels.back().polynomial};
    }
    if (j.contains("entries"))
      return {LoadedInput::Kind::tensor, tensor_to_poly(tensor_from_json(j))};
    if (j.contains("terms"))
      return {LoadedInput::Kind::polynomial, polynomial_from_json(j)};
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": not a polynomial, tensor or construction document");
}

}  // namespace realeig::io
