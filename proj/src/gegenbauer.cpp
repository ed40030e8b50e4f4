#include "realeig/gegenbauer.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "realeig/errors.hpp"

namespace realeig {
namespace {

constexpr double kBisectionWidth = 1e-12;
constexpr double kRootResidualTol = 1e-13;
constexpr double kSimplicityTol = 1e-8;

std::vector<double> shift_up(const std::vector<double>& c) {
  std::vector<double> out(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k];
  return out;
}

UnivariatePolynomial chebyshev_first_kind(int d) {
  std::vector<double> prev{1.0};
  if (d == 0) return UnivariatePolynomial(prev);
  std::vector<double> cur{0.0, 1.0};
  for (int k = 2; k <= d; ++k) {
    std::vector<double> next = shift_up(cur);
    for (auto& c : next) c *= 2.0;
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return UnivariatePolynomial(cur);
}

double bisect(const UnivariatePolynomial& q, double lo, double hi, double qlo) {
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    const double qm = q(mid);
    if (qm == 0.0) return mid;
    if ((qm < 0.0) == (qlo < 0.0)) {
      lo = mid;
      qlo = qm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

UnivariatePolynomial gegenbauer(const GegenbauerKey& key) {
  if (key.d < 0 || key.n < 2)
    throw ArgumentError("Gegenbauer key needs d >= 0 and n >= 2");
  if (key.n == 2) return chebyshev_first_kind(key.d);

  const double n = key.n;
  std::vector<double> prev{1.0};
  if (key.d == 0) return UnivariatePolynomial(prev);
  std::vector<double> cur{0.0, n - 2.0};
  // Integer weights and a single division by k keep every coefficient exact
  // whenever the true value is dyadic (always for even n, Legendre for n = 3).
  for (int k = 2; k <= key.d; ++k) {
    const double a = 2.0 * k + n - 4.0;
    const double b = k + n - 4.0;
    std::vector<double> next = shift_up(cur);
    for (std::size_t j = 0; j < next.size(); ++j) {
      const double lower = j < prev.size() ? b * prev[j] : 0.0;
      next[j] = (a * next[j] - lower) / k;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return UnivariatePolynomial(cur);
}

std::vector<double> isolate_simple_roots(const UnivariatePolynomial& q,
                                         int expected_count,
                                         int grid_per_degree) {
  if (q.is_zero()) throw RootCountError("zero polynomial has no isolated roots");
  const int deg = q.degree();
  std::vector<double> roots;
  if (deg >= 1) {
    // Cell midpoints plus the two endpoints. With an even cell count the
    // midpoints never include 0, where odd/even polynomials often vanish.
    const int cells = grid_per_degree * deg;
    std::vector<double> nodes;
    nodes.reserve(cells + 2);
    nodes.push_back(-1.0);
    for (int j = 0; j < cells; ++j)
      nodes.push_back(-1.0 + (2.0 * j + 1.0) / cells);
    nodes.push_back(1.0);

    double prev_t = nodes.front();
    double prev_q = q(prev_t);
    for (std::size_t j = 1; j < nodes.size(); ++j) {
      const double t = nodes[j];
      const double qt = q(t);
      const bool interior = j + 1 < nodes.size();
      if (qt == 0.0 && interior) {
        roots.push_back(t);
        // Restart bracketing past the exact zero.
        prev_t = t;
        prev_q = 0.0;
        continue;
      }
      if (prev_q != 0.0 && qt != 0.0 && (prev_q < 0.0) != (qt < 0.0)) {
        roots.push_back(bisect(q, prev_t, t, prev_q));
      }
      prev_t = t;
      prev_q = qt;
    }
  }

  if (static_cast<int>(roots.size()) != expected_count)
    throw RootCountError("found " + std::to_string(roots.size()) +
                         " roots in (-1,1), expected " +
                         std::to_string(expected_count));

  const auto dq = q.derivative();
  const double lead = std::abs(q.leading());
  for (auto& r : roots) {
    const double slope = dq(r);
    if (slope != 0.0) {
      const double polished = r - q(r) / slope;
      if (std::abs(polished - r) < kBisectionWidth) r = polished;
    }
    const double residual = std::abs(q(r)) / std::max(1.0, q.magnitude(r));
    if (residual > kRootResidualTol)
      throw RootCountError("root " + std::to_string(r) +
                           " did not polish: residual " +
                           std::to_string(residual));
    if (std::abs(dq(r)) / lead <= kSimplicityTol)
      throw RootCountError("root " + std::to_string(r) +
                           " is not certified simple");
  }
  return roots;
}

DerivativeRootSet derivative_roots(const GegenbauerKey& key) {
  if (key.d < 2) throw ArgumentError("derivative roots need d >= 2");
  const auto g = gegenbauer(key);
  const auto g1 = g.derivative();
  const auto g2 = g1.derivative();
  DerivativeRootSet out{key, isolate_simple_roots(g1, key.d - 1), {}};
  out.simplicity_margins.reserve(out.roots.size());
  for (double r : out.roots) out.simplicity_margins.push_back(std::abs(g2(r)));
  return out;
}

namespace {

double weighted_inner(int d1, int d2, int n) {
  const auto g1 = gegenbauer({d1, n});
  const auto g2 = gegenbauer({d2, n});
  // With z = cos(theta) the weight (1 - z^2)^((n-3)/2) dz becomes
  // sin(theta)^(n-2) dtheta, which is smooth up to both endpoints.
  auto integrand = [&](double theta) {
    const double z = std::cos(theta);
    return g1(z) * g2(z) * std::pow(std::sin(theta), n - 2);
  };
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, std::numbers::pi, 15, 1e-14);
}

}  // namespace

double orthogonality_defect(int d1, int d2, int n) {
  if (d1 == d2) throw ArgumentError("orthogonality defect needs d1 != d2");
  if (n < 3) throw ArgumentError("orthogonality weight needs n >= 3");
  if (d1 < 0 || d2 < 0) throw ArgumentError("negative degree");
  return weighted_inner(d1, d2, n);
}

double weighted_norm_squared(int d, int n) {
  if (n < 3) throw ArgumentError("orthogonality weight needs n >= 3");
  return weighted_inner(d, d, n);
}

}  // namespace realeig
