#include "realeig/kernels.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "realeig/errors.hpp"

namespace realeig {

PolynomialEvaluator::PolynomialEvaluator(const HomogeneousPolynomial& f)
    : n_(f.n_vars()), degree_(f.degree()) {
  coefs_.reserve(f.terms().size());
  exps_.reserve(f.terms().size() * n_);
  for (const auto& [m, c] : f.terms()) {
    coefs_.push_back(c);
    exps_.insert(exps_.end(), m.exps.begin(), m.exps.end());
  }
}

LocalModel PolynomialEvaluator::evaluate(const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw DimensionError("evaluation point has wrong dimension");
  const int stride = degree_ + 1;
  std::vector<double> pw(static_cast<std::size_t>(n_) * stride);
  for (int i = 0; i < n_; ++i) {
    double p = 1.0;
    for (int k = 0; k <= degree_; ++k) {
      pw[i * stride + k] = p;
      p *= x[i];
    }
  }

  LocalModel out;
  out.grad = Eigen::VectorXd::Zero(n_);
  out.hess = Eigen::MatrixXd::Zero(n_, n_);
  std::vector<double> p(n_), dp(n_), ddp(n_);
  for (std::size_t t = 0; t < coefs_.size(); ++t) {
    const int* e = &exps_[t * n_];
    const double c = coefs_[t];
    for (int i = 0; i < n_; ++i) {
      const double* row = &pw[i * stride];
      p[i] = row[e[i]];
      dp[i] = e[i] >= 1 ? e[i] * row[e[i] - 1] : 0.0;
      ddp[i] = e[i] >= 2 ? e[i] * (e[i] - 1) * row[e[i] - 2] : 0.0;
    }
    double all = c;
    for (int i = 0; i < n_; ++i) all *= p[i];
    out.value += all;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      double rest = c;
      for (int j = 0; j < n_; ++j)
        if (j != i) rest *= p[j];
      out.grad[i] += rest * dp[i];
      out.hess(i, i) += rest * ddp[i];
      for (int k = i + 1; k < n_; ++k) {
        if (e[k] == 0) continue;
        double rest2 = c * dp[i] * dp[k];
        for (int j = 0; j < n_; ++j)
          if (j != i && j != k) rest2 *= p[j];
        out.hess(i, k) += rest2;
      }
    }
  }
  for (int i = 0; i < n_; ++i)
    for (int k = i + 1; k < n_; ++k) out.hess(k, i) = out.hess(i, k);
  return out;
}

Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXd v = x;
  v[0] += x[0] >= 0.0 ? 1.0 : -1.0;
  const double vv = v.squaredNorm();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - (2.0 / vv) * v * v.transpose();
  return h.rightCols(n - 1);
}

SphereModel sphere_model(const PolynomialEvaluator& f, const Eigen::VectorXd& x) {
  const auto local = f.evaluate(x);
  SphereModel m;
  m.value = local.value;
  m.lagrange_lambda = local.grad.dot(x);
  m.riemannian_grad = local.grad - m.lagrange_lambda * x;
  m.residual = m.riemannian_grad.norm();
  m.basis = tangent_basis(x);
  m.tangent_hessian = m.basis.transpose() * local.hess * m.basis;
  m.tangent_hessian.diagonal().array() -= m.lagrange_lambda;
  return m;
}

namespace {

Eigen::VectorXd newton_direction(const SphereModel& m, const NewtonSettings& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.tangent_hessian);
  const Eigen::VectorXd mu = eig.eigenvalues();
  const Eigen::VectorXd b = eig.eigenvectors().transpose() *
                            (m.basis.transpose() * m.riemannian_grad);
  const double scale = mu.cwiseAbs().maxCoeff();
  Eigen::VectorXd coeffs(mu.size());
  for (int k = 0; k < mu.size(); ++k) {
    if (std::abs(mu[k]) > s.singular_rel_tol * scale && scale > 0.0) {
      coeffs[k] = -b[k] / mu[k];
    } else {
      coeffs[k] = -s.gradient_step * b[k];
    }
  }
  Eigen::VectorXd step = m.basis * (eig.eigenvectors() * coeffs);
  const double len = step.norm();
  if (len > s.max_step) step *= s.max_step / len;
  return step;
}

}  // namespace

NewtonOutcome riemannian_newton(const PolynomialEvaluator& f,
                                Eigen::VectorXd x0, const NewtonSettings& s) {
  NewtonOutcome out;
  out.x = x0.normalized();
  for (int it = 0;; ++it) {
    const auto m = sphere_model(f, out.x);
    out.residual = m.residual;
    out.iterations = it;
    if (m.residual <= s.grad_tol) {
      out.converged = true;
      return out;
    }
    if (it == s.max_iters || !std::isfinite(m.residual)) return out;
    out.x = (out.x + newton_direction(m, s)).normalized();
  }
}

NewtonOutcome polish(const PolynomialEvaluator& f, Eigen::VectorXd x, int steps,
                     const NewtonSettings& s) {
  NewtonOutcome best;
  best.x = x.normalized();
  best.residual = std::numeric_limits<double>::infinity();
  Eigen::VectorXd cur = best.x;
  for (int it = 0; it <= steps; ++it) {
    const auto m = sphere_model(f, cur);
    if (m.residual < best.residual) {
      best.x = cur;
      best.residual = m.residual;
      best.iterations = it;
    }
    if (m.residual == 0.0 || it == steps) break;
    cur = (cur + newton_direction(m, s)).normalized();
  }
  best.converged = best.residual <= s.grad_tol;
  return best;
}

Eigen::VectorXd random_unit_start(std::uint64_t seed, std::uint64_t index, int n) {
  // splitmix64 of (seed, index) decorrelates neighbouring streams.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  std::mt19937_64 rng(z);
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(n);
  do {
    for (int i = 0; i < n; ++i) x[i] = normal(rng);
  } while (x.norm() < 1e-8);
  return x.normalized();
}

std::vector<NewtonOutcome> multistart_serial(const PolynomialEvaluator& f,
                                             int starts, std::uint64_t seed,
                                             const NewtonSettings& s) {
  std::vector<NewtonOutcome> out(starts);
  for (int k = 0; k < starts; ++k)
    out[k] = riemannian_newton(f, random_unit_start(seed, k, f.n_vars()), s);
  return out;
}

std::vector<NewtonOutcome> multistart_parallel(const PolynomialEvaluator& f,
                                               int starts, std::uint64_t seed,
                                               const NewtonSettings& s) {
  std::vector<NewtonOutcome> out(starts);
#pragma omp parallel for schedule(dynamic, 16)
  for (int k = 0; k < starts; ++k)
    out[k] = riemannian_newton(f, random_unit_start(seed, k, f.n_vars()), s);
  return out;
}

}  // namespace realeig
