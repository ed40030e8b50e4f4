#include "realeig/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "realeig/errors.hpp"

namespace realeig {

int Monomial::degree() const noexcept {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

bool GradedLexOrder::operator()(const Monomial& a,
                                const Monomial& b) const noexcept {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(),
                                      a.exps.begin(), a.exps.end());
}

HomogeneousPolynomial::HomogeneousPolynomial(int n_vars, int degree)
    : n_vars_(n_vars), degree_(degree) {
  if (n_vars < 1) throw ArgumentError("polynomial needs at least one variable");
  if (degree < 0) throw ArgumentError("polynomial degree must be >= 0");
}

HomogeneousPolynomial HomogeneousPolynomial::from_terms(
    int n_vars, int degree,
    const std::vector<std::pair<std::vector<int>, double>>& terms) {
  HomogeneousPolynomial f(n_vars, degree);
  for (const auto& [exps, c] : terms) f.add_term(Monomial{exps}, c);
  return f;
}

HomogeneousPolynomial HomogeneousPolynomial::variable_power(int n_vars,
                                                            int var, int power,
                                                            double coef) {
  if (var < 0 || var >= n_vars)
    throw DimensionError("variable index out of range");
  HomogeneousPolynomial f(n_vars, power);
  Monomial m{std::vector<int>(n_vars, 0)};
  m.exps[var] = power;
  f.add_term(m, coef);
  return f;
}

double HomogeneousPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

void HomogeneousPolynomial::add_term(const Monomial& m, double c) {
  if (static_cast<int>(m.n_vars()) != n_vars_)
    throw DimensionError("monomial has " + std::to_string(m.n_vars()) +
                         " exponents, polynomial has " +
                         std::to_string(n_vars_) + " variables");
  if (std::any_of(m.exps.begin(), m.exps.end(), [](int e) { return e < 0; }))
    throw ArgumentError("negative exponent");
  if (m.degree() != degree_)
    throw ArgumentError("monomial degree " + std::to_string(m.degree()) +
                        " does not match polynomial degree " +
                        std::to_string(degree_));
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double HomogeneousPolynomial::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_vars_)
    throw DimensionError("point has " + std::to_string(x.size()) +
                         " coordinates, polynomial has " +
                         std::to_string(n_vars_) + " variables");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c;
    for (int i = 0; i < n_vars_; ++i) {
      for (int k = 0; k < m.exps[i]; ++k) t *= x[i];
    }
    sum += t;
  }
  return sum;
}

void HomogeneousPolynomial::check_compatible(
    const HomogeneousPolynomial& o) const {
  if (o.n_vars_ != n_vars_)
    throw DimensionError("polynomials live in different numbers of variables");
  // The zero polynomial is compatible with every degree.
  if (o.degree_ != degree_ && !o.is_zero() && !is_zero())
    throw ArgumentError("cannot add homogeneous polynomials of degrees " +
                        std::to_string(degree_) + " and " +
                        std::to_string(o.degree_));
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(
    const HomogeneousPolynomial& o) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator-=(
    const HomogeneousPolynomial& o) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second == 0.0 ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a,
                                const HomogeneousPolynomial& b) {
  if (a.n_vars() != b.n_vars())
    throw DimensionError("polynomials live in different numbers of variables");
  HomogeneousPolynomial out(a.n_vars(), a.degree() + b.degree());
  Monomial m{std::vector<int>(a.n_vars(), 0)};
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (int i = 0; i < a.n_vars(); ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

bool HomogeneousPolynomial::operator==(const HomogeneousPolynomial& o) const {
  if (n_vars_ != o.n_vars_) return false;
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && terms_ == o.terms_;
}

HomogeneousPolynomial partial(const HomogeneousPolynomial& f, int var) {
  if (var < 0 || var >= f.n_vars())
    throw DimensionError("variable index out of range");
  HomogeneousPolynomial out(f.n_vars(), std::max(f.degree() - 1, 0));
  if (f.degree() == 0) return out;
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exps[var];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exps[var] = e - 1;
    out.add_term(dm, c * e);
  }
  return out;
}

std::vector<HomogeneousPolynomial> gradient(const HomogeneousPolynomial& f) {
  std::vector<HomogeneousPolynomial> g;
  g.reserve(f.n_vars());
  for (int i = 0; i < f.n_vars(); ++i) g.push_back(partial(f, i));
  return g;
}

std::vector<std::vector<HomogeneousPolynomial>> hessian(
    const HomogeneousPolynomial& f) {
  const int n = f.n_vars();
  const auto g = gradient(f);
  std::vector<std::vector<HomogeneousPolynomial>> h(
      n, std::vector<HomogeneousPolynomial>(
             n, HomogeneousPolynomial(n, std::max(f.degree() - 2, 0))));
  if (f.degree() < 2) return h;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      h[i][j] = partial(g[i], j);
      if (j != i) h[j][i] = h[i][j];
    }
  }
  return h;
}

HomogeneousPolynomial laplacian(const HomogeneousPolynomial& f) {
  HomogeneousPolynomial out(f.n_vars(), std::max(f.degree() - 2, 0));
  if (f.degree() < 2) return out;
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < f.n_vars(); ++i) {
      const int e = m.exps[i];
      if (e < 2) continue;
      Monomial dm = m;
      dm.exps[i] = e - 2;
      out.add_term(dm, c * e * (e - 1));
    }
  }
  return out;
}

HomogeneousPolynomial include(const HomogeneousPolynomial& f) {
  HomogeneousPolynomial out(f.n_vars() + 1, f.degree());
  for (const auto& [m, c] : f.terms()) {
    Monomial pm = m;
    pm.exps.push_back(0);
    out.add_term(pm, c);
  }
  return out;
}

HomogeneousPolynomial radius_power(int n_vars, int k) {
  if (k < 0) throw ArgumentError("negative power of the radius");
  HomogeneousPolynomial r2(n_vars, 2);
  for (int i = 0; i < n_vars; ++i) {
    r2 += HomogeneousPolynomial::variable_power(n_vars, i, 2);
  }
  HomogeneousPolynomial out(n_vars, 0);
  out.add_term(Monomial{std::vector<int>(n_vars, 0)}, 1.0);
  for (int j = 0; j < k; ++j) out = out * r2;
  return out;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double UnivariatePolynomial::leading() const {
  if (coeffs_.empty()) throw ArgumentError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Parity UnivariatePolynomial::parity() const noexcept {
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0.0) continue;
    (k % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && !has_odd) return Parity::even;
  if (has_odd && !has_even) return Parity::odd;
  return Parity::none;
}

double UnivariatePolynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UnivariatePolynomial::magnitude(double t) const noexcept {
  const double a = std::abs(t);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * a + std::abs(*it);
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return UnivariatePolynomial(std::move(d));
}

std::string format(const HomogeneousPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const double mag = std::abs(c);
    if (first) {
      if (c < 0.0) os << "-";
    } else {
      os << (c < 0.0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1.0 || m.degree() == 0) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < m.n_vars(); ++i) {
      if (m.exps[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << i + 1;
      if (m.exps[i] > 1) os << "^" << m.exps[i];
      wrote = true;
    }
  }
  return os.str();
}

HomogeneousPolynomial homogenize_parity(const UnivariatePolynomial& p,
                                        int axis, int n_vars) {
  if (axis < 0 || axis >= n_vars)
    throw DimensionError("axis " + std::to_string(axis) +
                         " out of range for " + std::to_string(n_vars) +
                         " variables");
  if (p.is_zero()) throw ArgumentError("cannot homogenize the zero polynomial");
  const int d = p.degree();
  const auto& c = p.coeffs();
  for (int k = d - 1; k >= 0; k -= 2) {
    if (c[k] != 0.0)
      throw ParityError("coefficient of t^" + std::to_string(k) +
                        " breaks the parity of degree " + std::to_string(d));
  }
  HomogeneousPolynomial out(n_vars, d);
  for (int k = 0; 2 * k <= d; ++k) {
    const double ck = c[d - 2 * k];
    if (ck == 0.0) continue;
    out += ck * (HomogeneousPolynomial::variable_power(n_vars, axis, d - 2 * k) *
                 radius_power(n_vars, k));
  }
  return out;
}

}  // namespace realeig
