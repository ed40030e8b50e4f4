#pragma once

#include <map>
#include <span>
#include <vector>

#include "realeig/poly.hpp"

namespace realeig {

/// Sorted (non-decreasing) zero-based multi-index i_1 <= ... <= i_d.
using MultiIndex = std::vector<int>;

/// Number of distinct permutations of a sorted multi-index.
double multiplicity(const MultiIndex& idx);

/// All sorted multi-indices of the given order over dim indices, in
/// lexicographic order.
std::vector<MultiIndex> sorted_multi_indices(int order, int dim);

/// Real symmetric order-d tensor in compact storage: one value per sorted
/// multi-index. Entry lookup sorts the requested index first, so every
/// permutation of a position reads the same value.
///
/// Alongside each value a = c / multiplicity the tensor keeps the polynomial
/// coefficient c it stands for. Division by a multinomial is not invertible
/// in floating point, so tensors built by poly_to_tensor remember c exactly
/// and tensor_to_poly returns it; tensors built by set() use a * multiplicity.
class SymmetricTensor {
public:
  SymmetricTensor(int order, int dim);

  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }
  const std::map<MultiIndex, double>& entries() const noexcept { return entries_; }

  /// Any (unsorted) zero-based index of length order().
  double at(std::span<const int> index) const;
  /// Sets the value shared by every permutation of index.
  void set(std::span<const int> index, double value);
  /// Sets the entry from its polynomial coefficient: value = c / multiplicity.
  void set_coefficient(std::span<const int> index, double coefficient);
  /// Coefficient of the monomial for this index in f_A.
  double coefficient(std::span<const int> index) const;

  double frobenius_norm_squared() const;
  double frobenius_norm() const;

  /// Compares shape and values.
  bool operator==(const SymmetricTensor& o) const;

private:
  MultiIndex canonical(std::span<const int> index) const;

  int order_;
  int dim_;
  std::map<MultiIndex, double> entries_;
  std::map<MultiIndex, double> coefficients_;
};

struct EigenPair {
  std::vector<double> x;
  double lambda = 0.0;
  double residual = 0.0;
};

/// Flips x so its first coordinate with |x_i| > 1e-12 is positive. The
/// eigenvalue of -x is (-1)^d lambda.
EigenPair canonical_eigenpair(EigenPair p, int order);

SymmetricTensor poly_to_tensor(const HomogeneousPolynomial& f);
HomogeneousPolynomial tensor_to_poly(const SymmetricTensor& a);

/// A x^{d-1}, computed as grad f_A(x) / d.
std::vector<double> apply(const SymmetricTensor& a, std::span<const double> x);

/// Every partial trace Sum_i a_{i i k_3 .. k_d} is at most tol in magnitude.
bool is_traceless(const SymmetricTensor& a, double tol = 1e-12);

/// || A x^{d-1} - lambda x ||_2 for unit x (NormalizationError otherwise).
double eigen_residual(const SymmetricTensor& a, std::span<const double> x,
                      double lambda);

/// Sum over all n^d positions of (a_{i..} - lambda x_{i_1} .. x_{i_d})^2.
double rank_one_distance_squared(const SymmetricTensor& a,
                                 std::span<const double> x, double lambda);

struct RankOneApproximation {
  double lambda = 0.0;
  std::vector<double> x;
  /// Frobenius distance from A to lambda x^{(x)d}.
  double dist = 0.0;
  /// ||A||_F^2 - lambda^2.
  double dist_squared_closed_form = 0.0;
  /// dist_A evaluated entry by entry.
  double dist_squared_direct = 0.0;
  /// Another pair reached the same |lambda| within 1e-12.
  bool tie = false;
};

/// Best rank-one approximation from a complete eigenpair list: the pair of
/// largest |lambda|. Throws EmptyError on an empty list.
RankOneApproximation best_rank_one(const SymmetricTensor& a,
                                   std::span<const EigenPair> pairs);

}  // namespace realeig
