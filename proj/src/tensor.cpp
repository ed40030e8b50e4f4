#include "realeig/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "realeig/errors.hpp"

namespace realeig {
namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

MultiIndex monomial_to_index(const Monomial& m) {
  MultiIndex idx;
  for (int i = 0; i < static_cast<int>(m.n_vars()); ++i)
    idx.insert(idx.end(), m.exps[i], i);
  return idx;
}

Monomial index_to_monomial(const MultiIndex& idx, int dim) {
  Monomial m{std::vector<int>(dim, 0)};
  for (int i : idx) ++m.exps[i];
  return m;
}

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

double multiplicity(const MultiIndex& idx) {
  double denom = 1.0;
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j < idx.size() && idx[j] == idx[i]) ++j;
    denom *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return factorial(static_cast<int>(idx.size())) / denom;
}

std::vector<MultiIndex> sorted_multi_indices(int order, int dim) {
  std::vector<MultiIndex> out;
  if (order == 0) {
    out.emplace_back();
    return out;
  }
  MultiIndex cur(order, 0);
  while (true) {
    out.push_back(cur);
    int pos = order - 1;
    while (pos >= 0 && cur[pos] == dim - 1) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int k = pos + 1; k < order; ++k) cur[k] = cur[pos];
  }
  return out;
}

SymmetricTensor::SymmetricTensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 0) throw ArgumentError("tensor order must be >= 0");
  if (dim < 1) throw ArgumentError("tensor dimension must be >= 1");
}

MultiIndex SymmetricTensor::canonical(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != order_)
    throw DimensionError("index of length " + std::to_string(index.size()) +
                         " for a tensor of order " + std::to_string(order_));
  MultiIndex idx(index.begin(), index.end());
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw DimensionError("tensor index out of range");
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

double SymmetricTensor::at(std::span<const int> index) const {
  auto it = entries_.find(canonical(index));
  return it == entries_.end() ? 0.0 : it->second;
}

void SymmetricTensor::set(std::span<const int> index, double value) {
  auto idx = canonical(index);
  if (value == 0.0) {
    entries_.erase(idx);
    coefficients_.erase(idx);
  } else {
    coefficients_[idx] = value * multiplicity(idx);
    entries_[std::move(idx)] = value;
  }
}

void SymmetricTensor::set_coefficient(std::span<const int> index, double coefficient) {
  auto idx = canonical(index);
  if (coefficient == 0.0) {
    entries_.erase(idx);
    coefficients_.erase(idx);
  } else {
    entries_[idx] = coefficient / multiplicity(idx);
    coefficients_[std::move(idx)] = coefficient;
  }
}

double SymmetricTensor::coefficient(std::span<const int> index) const {
  auto it = coefficients_.find(canonical(index));
  return it == coefficients_.end() ? 0.0 : it->second;
}

bool SymmetricTensor::operator==(const SymmetricTensor& o) const {
  return order_ == o.order_ && dim_ == o.dim_ && entries_ == o.entries_;
}

double SymmetricTensor::frobenius_norm_squared() const {
  double s = 0.0;
  for (const auto& [idx, v] : entries_) s += multiplicity(idx) * v * v;
  return s;
}

double SymmetricTensor::frobenius_norm() const {
  return std::sqrt(frobenius_norm_squared());
}

EigenPair canonical_eigenpair(EigenPair p, int order) {
  for (double v : p.x) {
    if (std::abs(v) <= 1e-12) continue;
    if (v < 0.0) {
      for (auto& c : p.x) c = -c;
      if (order % 2 == 1) p.lambda = -p.lambda;
    }
    break;
  }
  return p;
}

SymmetricTensor poly_to_tensor(const HomogeneousPolynomial& f) {
  SymmetricTensor a(f.degree(), f.n_vars());
  for (const auto& [m, c] : f.terms()) {
    a.set_coefficient(monomial_to_index(m), c);
  }
  return a;
}

HomogeneousPolynomial tensor_to_poly(const SymmetricTensor& a) {
  HomogeneousPolynomial f(a.dim(), a.order());
  for (const auto& [idx, v] : a.entries())
    f.add_term(index_to_monomial(idx, a.dim()), a.coefficient(idx));
  return f;
}

std::vector<double> apply(const SymmetricTensor& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.dim())
    throw DimensionError("vector length does not match tensor dimension");
  std::vector<double> out(a.dim(), 0.0);
  if (a.order() == 0) return out;
  const auto f = tensor_to_poly(a);
  const double inv_d = 1.0 / a.order();
  for (int i = 0; i < a.dim(); ++i) out[i] = partial(f, i).eval(x) * inv_d;
  return out;
}

bool is_traceless(const SymmetricTensor& a, double tol) {
  if (a.order() < 2) throw ArgumentError("traces need order >= 2");
  // Partial traces are indexed by the remaining d-2 indices, which by
  // symmetry may be taken sorted.
  for (const auto& rest : sorted_multi_indices(a.order() - 2, a.dim())) {
    double trace = 0.0;
    MultiIndex full(rest);
    full.push_back(0);
    full.push_back(0);
    for (int i = 0; i < a.dim(); ++i) {
      full[a.order() - 2] = i;
      full[a.order() - 1] = i;
      trace += a.at(full);
    }
    if (std::abs(trace) > tol) return false;
  }
  return true;
}

double eigen_residual(const SymmetricTensor& a, std::span<const double> x,
                      double lambda) {
  if (std::abs(norm2(x) - 1.0) > 1e-12)
    throw NormalizationError("eigen residual needs a unit vector");
  const auto ax = realeig::apply(a, x);
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double r = ax[i] - lambda * x[i];
    s += r * r;
  }
  return std::sqrt(s);
}

double rank_one_distance_squared(const SymmetricTensor& a,
                                 std::span<const double> x, double lambda) {
  if (static_cast<int>(x.size()) != a.dim())
    throw DimensionError("vector length does not match tensor dimension");
  double s = 0.0;
  for (const auto& idx : sorted_multi_indices(a.order(), a.dim())) {
    double prod = lambda;
    for (int i : idx) prod *= x[i];
    const double r = a.at(idx) - prod;
    s += multiplicity(idx) * r * r;
  }
  return s;
}

RankOneApproximation best_rank_one(const SymmetricTensor& a,
                                   std::span<const EigenPair> pairs) {
  if (pairs.empty()) throw EmptyError("best rank-one needs at least one eigenpair");
  double best_abs = 0.0;
  for (const auto& p : pairs) best_abs = std::max(best_abs, std::abs(p.lambda));

  // Among pairs attaining the maximum, choose the lexicographically smallest
  // canonical representative.
  std::vector<EigenPair> top;
  for (const auto& p : pairs) {
    if (best_abs - std::abs(p.lambda) <= 1e-12)
      top.push_back(canonical_eigenpair(p, a.order()));
  }
  std::sort(top.begin(), top.end(), [](const EigenPair& l, const EigenPair& r) {
    return l.x < r.x;
  });

  RankOneApproximation out;
  out.lambda = top.front().lambda;
  out.x = top.front().x;
  // Distinct up to the antipode means a genuine tie.
  for (const auto& p : top) {
    double diff = 0.0;
    for (std::size_t i = 0; i < p.x.size(); ++i)
      diff = std::max(diff, std::abs(p.x[i] - out.x[i]));
    if (diff > 1e-8) out.tie = true;
  }
  out.dist_squared_closed_form =
      std::max(0.0, a.frobenius_norm_squared() - out.lambda * out.lambda);
  out.dist_squared_direct = rank_one_distance_squared(a, out.x, out.lambda);
  out.dist = std::sqrt(out.dist_squared_direct);
  return out;
}

}  // namespace realeig
