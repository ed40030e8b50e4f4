#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "realeig/poly.hpp"

namespace realeig {

/// Value, Euclidean gradient and Euclidean Hessian at one point.
struct LocalModel {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

/// A polynomial flattened for repeated evaluation of value, gradient and
/// Hessian in one pass over its terms.
class PolynomialEvaluator {
public:
  explicit PolynomialEvaluator(const HomogeneousPolynomial& f);

  int n_vars() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }

  LocalModel evaluate(const Eigen::VectorXd& x) const;

private:
  int n_;
  int degree_;
  std::vector<double> coefs_;
  std::vector<int> exps_;  // term-major, n_ per term
};

/// Orthonormal basis (n x (n-1)) of the tangent space x^perp at unit x, the
/// trailing columns of the Householder reflection sending x to -+e_0.
Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& x);

/// Riemannian gradient and Hessian of f restricted to the sphere, the latter
/// expressed in tangent_basis(x) coordinates: Q^T (H - lambda I) Q with
/// lambda = <grad f, x>.
struct SphereModel {
  double value = 0.0;
  double lagrange_lambda = 0.0;
  Eigen::VectorXd riemannian_grad;
  double residual = 0.0;
  Eigen::MatrixXd basis;
  Eigen::MatrixXd tangent_hessian;
};

SphereModel sphere_model(const PolynomialEvaluator& f, const Eigen::VectorXd& x);

struct NewtonSettings {
  int max_iters = 100;
  double grad_tol = 1e-12;
  /// Tangent Hessian eigenvalues below this fraction of the largest one are
  /// treated as singular; those directions take a projected-gradient step.
  double singular_rel_tol = 1e-10;
  double gradient_step = 0.1;
  /// Cap on the length of one tangent step, in radians.
  double max_step = 0.5;
};

struct NewtonOutcome {
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Riemannian Newton on the sphere from x0, retracting by renormalization.
NewtonOutcome riemannian_newton(const PolynomialEvaluator& f,
                                Eigen::VectorXd x0, const NewtonSettings& s);

/// Runs `steps` further Newton steps, keeping the iterate of least residual.
NewtonOutcome polish(const PolynomialEvaluator& f, Eigen::VectorXd x, int steps,
                     const NewtonSettings& s);

/// Seeded Gaussian vector normalized to the unit sphere. Depends only on
/// (seed, index), so starts are reproducible in any evaluation order.
Eigen::VectorXd random_unit_start(std::uint64_t seed, std::uint64_t index, int n);

/// Serial reference multistart: outcome k comes from random_unit_start(seed, k).
std::vector<NewtonOutcome> multistart_serial(const PolynomialEvaluator& f,
                                             int starts, std::uint64_t seed,
                                             const NewtonSettings& s);

/// OpenMP multistart; returns exactly what multistart_serial returns.
std::vector<NewtonOutcome> multistart_parallel(const PolynomialEvaluator& f,
                                               int starts, std::uint64_t seed,
                                               const NewtonSettings& s);

}  // namespace realeig
