#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace realeig {

/// Exponent vector of a monomial x_0^e_0 ... x_{n-1}^e_{n-1}.
struct Monomial {
  std::vector<int> exps;

  int degree() const noexcept;
  std::size_t n_vars() const noexcept { return exps.size(); }

  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order, largest first: higher total degree first, then
/// the larger exponent of x_0, then x_1, ...  So x_0^d is the first monomial.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse homogeneous polynomial with real coefficients.
///
/// Terms are kept in canonical form: every monomial has total degree equal to
/// degree() and no stored coefficient is exactly zero. The zero polynomial
/// has an empty term map.
class HomogeneousPolynomial {
public:
  using TermMap = std::map<Monomial, double, GradedLexOrder>;

  HomogeneousPolynomial(int n_vars, int degree);

  /// Builds from (exponents, coefficient) pairs; repeated monomials add up.
  static HomogeneousPolynomial from_terms(
      int n_vars, int degree,
      const std::vector<std::pair<std::vector<int>, double>>& terms);

  /// x_var^power as a polynomial in n_vars variables.
  static HomogeneousPolynomial variable_power(int n_vars, int var, int power,
                                              double coef = 1.0);

  int n_vars() const noexcept { return n_vars_; }
  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  double coefficient(const Monomial& m) const;

  /// Adds c to the coefficient of m, removing the term if it becomes zero.
  void add_term(const Monomial& m, double c);

  double eval(std::span<const double> x) const;

  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o);
  HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& o);
  HomogeneousPolynomial& operator*=(double s);

  friend HomogeneousPolynomial operator+(HomogeneousPolynomial a,
                                         const HomogeneousPolynomial& b) {
    return a += b;
  }
  friend HomogeneousPolynomial operator-(HomogeneousPolynomial a,
                                         const HomogeneousPolynomial& b) {
    return a -= b;
  }
  friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, double s) {
    return a *= s;
  }
  friend HomogeneousPolynomial operator*(double s, HomogeneousPolynomial a) {
    return a *= s;
  }
  friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a,
                                         const HomogeneousPolynomial& b);

  bool operator==(const HomogeneousPolynomial& o) const;

private:
  void check_compatible(const HomogeneousPolynomial& o) const;

  int n_vars_;
  int degree_;
  TermMap terms_;
};

/// Partial derivative d f / d x_var. Degree-0 input gives the zero polynomial.
HomogeneousPolynomial partial(const HomogeneousPolynomial& f, int var);

std::vector<HomogeneousPolynomial> gradient(const HomogeneousPolynomial& f);

/// Symmetric matrix of second partials, row-major nested vectors.
std::vector<std::vector<HomogeneousPolynomial>> hessian(
    const HomogeneousPolynomial& f);

HomogeneousPolynomial laplacian(const HomogeneousPolynomial& f);

/// i(f)(x_0..x_n) = f(x_0..x_{n-1}): pads every exponent vector with a zero.
HomogeneousPolynomial include(const HomogeneousPolynomial& f);

/// (x_0^2 + ... + x_{n-1}^2)^k.
HomogeneousPolynomial radius_power(int n_vars, int k);

enum class Parity { even, odd, none };

/// Dense univariate polynomial; coeffs()[k] multiplies t^k. Trailing zeros
/// are trimmed so the leading coefficient is nonzero (or coeffs() is empty).
class UnivariatePolynomial {
public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double leading() const;
  Parity parity() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  double operator()(double t) const noexcept;
  /// Sum_k |c_k| |t|^k, the scale of rounding error in operator().
  double magnitude(double t) const noexcept;
  UnivariatePolynomial derivative() const;

  bool operator==(const UnivariatePolynomial&) const = default;

private:
  std::vector<double> coeffs_;
};

/// Human-readable form with one-based variables, e.g. "x1^3 - 3*x1*x2^2".
std::string format(const HomogeneousPolynomial& f);

/// Degree-d homogeneous polynomial Sum_k c_{d-2k} x_axis^{d-2k} r^{2k} that
/// agrees with p(x_axis) on the unit sphere. axis is zero-based.
/// Throws ParityError unless p only has terms t^{d-2k}.
HomogeneousPolynomial homogenize_parity(const UnivariatePolynomial& p,
                                        int axis, int n_vars);

}  // namespace realeig
