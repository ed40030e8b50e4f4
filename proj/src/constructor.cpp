#include "realeig/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "realeig/errors.hpp"
#include "realeig/gegenbauer.hpp"

namespace realeig {
namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Rounds to kEpsilonBits significant bits. A short mantissa keeps every
// product epsilon * c in the lift exact, so harmonicity survives rounding.
constexpr int kEpsilonBits = 8;

double short_mantissa(double e) {
  int exp = 0;
  const double frac = std::frexp(e, &exp);
  return std::ldexp(std::round(std::ldexp(frac, kEpsilonBits)), exp - kEpsilonBits);
}

}  // namespace

std::vector<double> EpsilonSchedule::values() const {
  validate();
  std::vector<double> out;
  for (double e = start; e >= floor; e *= ratio) {
    const double v = short_mantissa(e);
    if (out.empty() || v < out.back()) out.push_back(v);
  }
  return out;
}

void EpsilonSchedule::validate() const {
  if (!(start > 0.0) || !(floor > 0.0) || !(ratio > 0.0 && ratio < 1.0) ||
      floor > start)
    throw ArgumentError("epsilon schedule must be positive and strictly decreasing");
}

void ConstructionParams::validate() const {
  if (d < 2) throw ArgumentError("construct needs d >= 2; use construct_linear for d = 1");
  if (n_target < 2) throw ArgumentError("construct needs n_target >= 2");
  if (a == 0.0 && b == 0.0) throw ArgumentError("base phase (a, b) must be nonzero");
  epsilon_schedule.validate();
  solver.validate();
}

HomogeneousPolynomial base_m_d2(int d, double a, double b) {
  if (d < 1) throw ArgumentError("base_m_d2 needs d >= 1");
  if (a == 0.0 && b == 0.0) throw ArgumentError("base phase (a, b) must be nonzero");
  HomogeneousPolynomial out(2, d);
  // (x_1 + i x_0)^d = sum_k C(d,k) x_1^{d-k} i^k x_0^k
  for (int k = 0; k <= d; ++k) {
    const double c = binomial(d, k);
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    const double coef = (k % 2 == 0 ? a : b) * sign * c;
    out.add_term(Monomial{{k, d - k}}, coef);
  }
  return out;
}

HomogeneousPolynomial zonal(int d, int n) {
  if (d < 1 || n < 2) throw ArgumentError("zonal needs d >= 1 and n >= 2");
  return homogenize_parity(gegenbauer({d, n}), n - 1, n);
}

HomogeneousPolynomial lift(const HomogeneousPolynomial& m, double epsilon) {
  if (epsilon < 0.0) throw ArgumentError("lift needs epsilon >= 0");
  return zonal(m.degree(), m.n_vars() + 1) + epsilon * include(m);
}

ConstructionLevel certify_level(const HomogeneousPolynomial& f,
                                std::optional<double> epsilon,
                                const SolverConfig& solver, double residual_tol,
                                double margin_tol) {
  ConstructionLevel level;
  level.n = f.n_vars();
  level.polynomial = f;
  level.tensor = poly_to_tensor(f);
  level.epsilon_used = epsilon;
  level.report = find_critical_points(f, solver);

  auto& cert = level.certificate;
  const auto& report = level.report;
  cert.count = report.found_count;
  cert.expected = report.expected_count;
  cert.euler_sum = report.euler_sum;
  cert.index_census.assign(f.n_vars(), 0);
  cert.min_margin = report.points.empty() ? 0.0 : report.points.front().nondegeneracy_margin;
  for (const auto& cp : report.points) {
    cert.min_margin = std::min(cert.min_margin, cp.nondegeneracy_margin);
    ++cert.index_census[cp.morse_index];
  }
  if (!report.certified) return level;

  try {
    const auto pairs = certify(report, level.tensor, residual_tol);
    for (const auto& p : pairs) cert.max_residual = std::max(cert.max_residual, p.residual);
  } catch (const CertificationError&) {
    return level;
  }
  cert.certified = cert.min_margin >= margin_tol;
  return level;
}

ConstructionResult construct(const ConstructionParams& params) {
  params.validate();
  ConstructionResult result;
  result.d = params.d;
  result.n_target = params.n_target;

  auto base = certify_level(base_m_d2(params.d, params.a, params.b), std::nullopt,
                            params.solver, params.residual_tol, params.margin_tol);
  if (!base.certificate.certified)
    throw EpsilonExhaustedError("base level n = 2 failed certification",
                                base.report.diagnostics);
  result.levels.push_back(std::move(base));

  const auto schedule = params.epsilon_schedule.values();
  for (int n = 3; n <= params.n_target; ++n) {
    const auto& prev = result.levels.back().polynomial;
    std::string last_diagnostics;
    bool done = false;
    for (double eps : schedule) {
      auto level = certify_level(lift(prev, eps), eps, params.solver,
                                 params.residual_tol, params.margin_tol);
      if (level.certificate.certified) {
        result.levels.push_back(std::move(level));
        done = true;
        break;
      }
      last_diagnostics = "epsilon " + std::to_string(eps) + ": " + level.report.diagnostics;
    }
    if (!done)
      throw EpsilonExhaustedError(
          "no epsilon in the schedule certified level n = " + std::to_string(n),
          last_diagnostics);
  }
  return result;
}

ConstructionResult construct_linear(int n_target, const SolverConfig& solver) {
  if (n_target < 2) throw ArgumentError("construct_linear needs n_target >= 2");
  ConstructionResult result;
  result.d = 1;
  result.n_target = n_target;
  for (int n = 2; n <= n_target; ++n) {
    auto level = certify_level(HomogeneousPolynomial::variable_power(n, n - 1, 1),
                               std::nullopt, solver, 1e-10, 1e-8);
    if (!level.certificate.certified)
      throw CertificationError("height function failed certification: " +
                               level.report.diagnostics);
    result.levels.push_back(std::move(level));
  }
  return result;
}

ConstructionLevel generalized_construct(const UnivariatePolynomial& p,
                                        const HomogeneousPolynomial& f,
                                        const EpsilonSchedule& schedule,
                                        const SolverConfig& solver,
                                        double residual_tol, double margin_tol) {
  const int d = f.degree();
  if (p.degree() != d)
    throw PreconditionError("deg p = " + std::to_string(p.degree()) +
                            " differs from deg f = " + std::to_string(d));
  if (d < 2) throw PreconditionError("generalized construction needs d >= 2");
  const Parity want = d % 2 == 0 ? Parity::even : Parity::odd;
  if (p.parity() != want) throw PreconditionError("p does not have the parity of d");
  try {
    isolate_simple_roots(p.derivative(), d - 1);
  } catch (const RootCountError& e) {
    throw PreconditionError(std::string("p' must have d-1 simple roots in (-1,1): ") +
                            e.what());
  }
  const auto base = certify_level(f, std::nullopt, solver, residual_tol, margin_tol);
  if (!base.certificate.certified)
    throw PreconditionError("f is not certified with 2 m_{d,n} critical points: " +
                            base.report.diagnostics);

  const auto axial = homogenize_parity(p, f.n_vars(), f.n_vars() + 1);
  std::string last_diagnostics;
  for (double eps : schedule.values()) {
    auto level = certify_level(axial + eps * include(f), eps, solver, residual_tol,
                               margin_tol);
    if (level.certificate.certified) return level;
    last_diagnostics = "epsilon " + std::to_string(eps) + ": " + level.report.diagnostics;
  }
  throw EpsilonExhaustedError("no epsilon in the schedule certified the generalized lift",
                              last_diagnostics);
}

}  // namespace realeig
