#pragma once

#include <vector>

#include "realeig/poly.hpp"

namespace realeig {

/// Degree d and ambient dimension n; the Gegenbauer parameter is (n-2)/2.
struct GegenbauerKey {
  int d = 0;
  int n = 2;
};

/// Roots of G'_{d,n} in (-1, 1), increasing.
struct DerivativeRootSet {
  GegenbauerKey key;
  std::vector<double> roots;
  /// |G''_{d,n}(root)| for each root.
  std::vector<double> simplicity_margins;
};

/// G_{d,n} from the three-term recurrence
///   G_0 = 1, G_1 = (n-2) t,
///   G_d = ( 2t (d + n/2 - 2) G_{d-1} - (d + n - 4) G_{d-2} ) / d.
///
/// For n = 2 the recurrence collapses to zero from d = 1 on, so the
/// parameter-zero limit T_d (Chebyshev, first kind) is returned instead;
/// T_d(x_2) is the zonal harmonic cos(d theta) on the circle.
UnivariatePolynomial gegenbauer(const GegenbauerKey& key);

/// Root isolation on (-1, 1) for a polynomial whose roots there are expected
/// to be simple: sign-change bracketing on a uniform grid of
/// grid_per_degree * degree cells, bisection to width 1e-12, one Newton step.
///
/// Throws RootCountError if the number of roots found differs from
/// expected_count or a root fails the simplicity certificate.
std::vector<double> isolate_simple_roots(const UnivariatePolynomial& q,
                                         int expected_count,
                                         int grid_per_degree = 64);

/// The d-1 roots of G'_{d,n}; requires d >= 2.
DerivativeRootSet derivative_roots(const GegenbauerKey& key);

/// Integral over [-1,1] of G_{d1,n} G_{d2,n} (1-z^2)^{(n-3)/2} dz computed by
/// adaptive Gauss-Kronrod quadrature. Requires d1 != d2 and n >= 3.
double orthogonality_defect(int d1, int d2, int n);

/// The diagonal integral for d, used to scale orthogonality_defect.
double weighted_norm_squared(int d, int n);

}  // namespace realeig
