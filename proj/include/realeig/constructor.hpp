#pragma once

#include <optional>
#include <vector>

#include "realeig/poly.hpp"
#include "realeig/solver.hpp"
#include "realeig/tensor.hpp"

namespace realeig {

/// Geometric epsilon schedule start, start*ratio, ... while >= floor. Each
/// value is rounded to an 8-bit mantissa (0.1 becomes 0.10009765625) so the
/// lift's coefficients, and hence its Laplacian, are computed exactly.
struct EpsilonSchedule {
  double start = 0.1;
  double ratio = 0.5;
  double floor = 1e-6;

  std::vector<double> values() const;
  void validate() const;
};

struct ConstructionParams {
  int d = 3;
  int n_target = 3;
  EpsilonSchedule epsilon_schedule;
  /// Coefficients of a cos(d theta) + b sin(d theta) at the base level.
  double a = 1.0;
  double b = 0.0;
  SolverConfig solver;
  /// Eigen residual ||A x^{d-1} - lambda x|| bound for every point.
  double residual_tol = 1e-10;
  double margin_tol = 1e-8;

  void validate() const;
};

struct LevelCertificate {
  long count = 0;
  long expected = 0;
  double min_margin = 0.0;
  /// Largest eigen residual over the certified eigenpairs.
  double max_residual = 0.0;
  int euler_sum = 0;
  /// index_census[k] = number of points of Morse index k.
  std::vector<long> index_census;
  bool certified = false;
};

struct ConstructionLevel {
  int n = 2;
  HomogeneousPolynomial polynomial{2, 0};
  SymmetricTensor tensor{0, 2};
  std::optional<double> epsilon_used;
  LevelCertificate certificate;
  SolveReport report;
};

struct ConstructionResult {
  int d = 0;
  int n_target = 0;
  std::vector<ConstructionLevel> levels;
};

/// a Re((x_1 + i x_0)^d) + b Im((x_1 + i x_0)^d): restricts to
/// a cos(d theta) + b sin(d theta) with x_0 = sin theta, x_1 = cos theta.
HomogeneousPolynomial base_m_d2(int d, double a, double b);

/// G_{d,n}(x_{n-1}) homogenized: the zonal harmonic about the last axis.
HomogeneousPolynomial zonal(int d, int n);

/// zonal(d, n+1) + epsilon * include(m).
HomogeneousPolynomial lift(const HomogeneousPolynomial& m, double epsilon);

/// Runs the solver on f and checks count, margins and eigen residuals
/// against the tensor of f; the verdict is level.certificate.certified.
ConstructionLevel certify_level(const HomogeneousPolynomial& f,
                                std::optional<double> epsilon,
                                const SolverConfig& solver, double residual_tol,
                                double margin_tol);

/// Inductive construction for d >= 2 from the circle up to n_target, each
/// level certified. Throws EpsilonExhaustedError when no epsilon works.
ConstructionResult construct(const ConstructionParams& params);

/// d = 1: the height function x_n at every level, with 2 critical points.
ConstructionResult construct_linear(int n_target, const SolverConfig& solver = {});

/// p(x_{n+1}) + epsilon f(x_1..x_n) for an arbitrary parity-matched p whose
/// derivative has d-1 simple roots in (-1,1) and an f with full count.
/// Throws PreconditionError if p fails those hypotheses.
ConstructionLevel generalized_construct(const UnivariatePolynomial& p,
                                        const HomogeneousPolynomial& f,
                                        const EpsilonSchedule& schedule = {},
                                        const SolverConfig& solver = {},
                                        double residual_tol = 1e-10,
                                        double margin_tol = 1e-8);

}  // namespace realeig
