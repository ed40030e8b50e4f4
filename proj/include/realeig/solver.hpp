#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "realeig/poly.hpp"
#include "realeig/tensor.hpp"

namespace realeig {

enum class Execution { serial, parallel };

struct SolverConfig {
  int starts_per_expected_point = 50;
  int max_newton_iters = 100;
  double grad_tol = 1e-12;
  /// Angular threshold (radians) for merging converged points.
  double cluster_angle_tol = 1e-6;
  double nondegeneracy_tol = 1e-8;
  std::uint64_t seed = 0xC0FFEE;
  Execution execution = Execution::parallel;

  /// Throws ArgumentError on nonpositive tolerances or fewer than 10 starts
  /// per expected point.
  void validate() const;
};

struct CriticalPoint {
  std::vector<double> x;
  double value = 0.0;
  /// <grad f(x), x>, equal to d * value by the Euler identity.
  double lagrange_lambda = 0.0;
  int morse_index = 0;
  /// Smallest |eigenvalue| of the tangent-space Hessian.
  double nondegeneracy_margin = 0.0;
  /// Norm of the Riemannian gradient.
  double residual = 0.0;
};

struct SolveReport {
  int n_vars = 0;
  int degree = 0;
  /// Nondegenerate critical points, closed under x -> -x, sorted
  /// lexicographically by coordinates.
  std::vector<CriticalPoint> points;
  /// Converged points whose margin was at or below nondegeneracy_tol.
  std::vector<CriticalPoint> degenerate_points;
  long expected_count = 0;
  long found_count = 0;
  int euler_sum = 0;
  bool certified = false;
  bool degenerate_detected = false;
  bool continuum_suspected = false;
  int total_starts = 0;
  int converged_starts = 0;
  std::string diagnostics;
};

/// m_{d,n} = 1 + (d-1) + ... + (d-1)^{n-1}, the generic number of
/// eigenpoints of an order-d symmetric tensor in dimension n.
long count_eigenpoints(int d, int n);

/// Euler characteristic of S^{n-1}.
int sphere_euler_characteristic(int n);

struct MorseData {
  int index = 0;
  double margin = 0.0;
};

/// Morse index and nondegeneracy margin of f restricted to the sphere at a
/// critical point x. Throws DegenerateCriticalPointError when
/// margin <= tol.
MorseData morse_index(const HomogeneousPolynomial& f, std::span<const double> x,
                      double tol = 1e-8);

/// Multistart Riemannian Newton enumeration of the critical points of f on
/// S^{n-1}, certified against the count 2 m_{d,n}.
SolveReport find_critical_points(const HomogeneousPolynomial& f,
                                 const SolverConfig& config = {});

/// Converts a certified report into eigenpairs of A (lambda = lagrange / d)
/// and checks each against the tensor directly. Throws CertificationError.
std::vector<EigenPair> certify(const SolveReport& report, const SymmetricTensor& a,
                               double residual_tol = 1e-10);

}  // namespace realeig
