#include "realeig/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "realeig/errors.hpp"
#include "realeig/kernels.hpp"

namespace realeig {
namespace {

constexpr int kPolishSteps = 3;
constexpr int kContinuumThreshold = 10;

Eigen::VectorXd to_eigen(std::span<const double> x) {
  Eigen::VectorXd v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
  return v;
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

Eigen::VectorXd canonical_sign(Eigen::VectorXd x) {
  for (int i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) <= 1e-9) continue;
    if (x[i] < 0.0) x = -x;
    break;
  }
  return x;
}

/// Angle between the lines spanned by unit vectors a and b.
double projective_angle(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double chord = std::min((a - b).norm(), (a + b).norm());
  return 2.0 * std::asin(std::min(1.0, 0.5 * chord));
}

MorseData morse_from_model(const SphereModel& m) {
  MorseData out;
  if (m.tangent_hessian.size() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.tangent_hessian,
                                                     Eigen::EigenvaluesOnly);
  const auto& mu = eig.eigenvalues();
  out.index = static_cast<int>((mu.array() < 0.0).count());
  out.margin = mu.cwiseAbs().minCoeff();
  return out;
}

CriticalPoint describe(const PolynomialEvaluator& f, const Eigen::VectorXd& x) {
  const auto m = sphere_model(f, x);
  const auto morse = morse_from_model(m);
  CriticalPoint cp;
  cp.x = to_std(x);
  cp.value = m.value;
  cp.lagrange_lambda = m.lagrange_lambda;
  cp.morse_index = morse.index;
  cp.nondegeneracy_margin = morse.margin;
  cp.residual = m.residual;
  return cp;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

void SolverConfig::validate() const {
  if (starts_per_expected_point < 10)
    throw ArgumentError("starts_per_expected_point must be >= 10");
  if (max_newton_iters < 1) throw ArgumentError("max_newton_iters must be >= 1");
  if (!(grad_tol > 0.0) || !(cluster_angle_tol > 0.0) || !(nondegeneracy_tol > 0.0))
    throw ArgumentError("solver tolerances must be positive");
}

long count_eigenpoints(int d, int n) {
  if (d < 1 || n < 1) throw ArgumentError("count_eigenpoints needs d, n >= 1");
  long total = 0;
  long term = 1;
  for (int k = 0; k < n; ++k) {
    total += term;
    term *= d - 1;
  }
  return total;
}

int sphere_euler_characteristic(int n) { return n % 2 == 1 ? 2 : 0; }

MorseData morse_index(const HomogeneousPolynomial& f, std::span<const double> x,
                      double tol) {
  if (static_cast<int>(x.size()) != f.n_vars())
    throw DimensionError("point dimension does not match polynomial");
  const auto v = to_eigen(x);
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw NormalizationError("morse_index needs a unit vector");
  const PolynomialEvaluator eval(f);
  const auto m = sphere_model(eval, v);
  if (m.residual > 1e-6 * std::max(1.0, std::abs(m.lagrange_lambda)))
    throw PreconditionError("point is not critical: residual " +
                            std::to_string(m.residual));
  const auto morse = morse_from_model(m);
  if (morse.margin <= tol)
    throw DegenerateCriticalPointError("degenerate critical point: margin " +
                                       std::to_string(morse.margin));
  return morse;
}

SolveReport find_critical_points(const HomogeneousPolynomial& f,
                                 const SolverConfig& config) {
  config.validate();
  if (f.is_zero()) throw ArgumentError("polynomial is identically zero");
  if (f.degree() < 1) throw ArgumentError("polynomial degree must be >= 1");
  if (f.n_vars() < 2) throw ArgumentError("sphere solver needs n >= 2");

  const int n = f.n_vars();
  SolveReport report;
  report.n_vars = n;
  report.degree = f.degree();
  report.expected_count = 2 * count_eigenpoints(f.degree(), n);
  report.total_starts =
      static_cast<int>(config.starts_per_expected_point * report.expected_count);

  const PolynomialEvaluator eval(f);
  NewtonSettings settings;
  settings.max_iters = config.max_newton_iters;
  settings.grad_tol = config.grad_tol;

  const auto outcomes =
      config.execution == Execution::parallel
          ? multistart_parallel(eval, report.total_starts, config.seed, settings)
          : multistart_serial(eval, report.total_starts, config.seed, settings);

  struct Converged {
    Eigen::VectorXd x;
    double residual;
  };
  std::vector<Converged> pts;
  for (const auto& o : outcomes) {
    if (o.converged) pts.push_back({canonical_sign(o.x), o.residual});
  }
  report.converged_starts = static_cast<int>(pts.size());
  std::sort(pts.begin(), pts.end(), [](const Converged& a, const Converged& b) {
    for (int i = 0; i < a.x.size(); ++i) {
      if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
    }
    return a.residual < b.residual;
  });

  // Single-linkage clustering of the projective classes.
  DisjointSets sets(static_cast<int>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (projective_angle(pts[i].x, pts[j].x) <= config.cluster_angle_tol)
        sets.unite(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::vector<int> rep_of(pts.size(), -1);
  std::vector<int> reps;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int root = sets.find(static_cast<int>(i));
    if (rep_of[root] < 0) {
      rep_of[root] = static_cast<int>(i);
      reps.push_back(root);
    } else if (pts[i].residual < pts[rep_of[root]].residual) {
      rep_of[root] = static_cast<int>(i);
    }
  }

  double max_residual = 0.0;
  for (int root : reps) {
    const auto polished = polish(eval, pts[rep_of[root]].x, kPolishSteps, settings);
    const Eigen::VectorXd x = canonical_sign(polished.x);
    for (const Eigen::VectorXd& y : {x, Eigen::VectorXd(-x)}) {
      auto cp = describe(eval, y);
      if (cp.nondegeneracy_margin > config.nondegeneracy_tol) {
        max_residual = std::max(max_residual, cp.residual);
        report.points.push_back(std::move(cp));
      } else {
        report.degenerate_points.push_back(std::move(cp));
      }
    }
  }
  auto by_coords = [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.x < b.x;
  };
  std::sort(report.points.begin(), report.points.end(), by_coords);
  std::sort(report.degenerate_points.begin(), report.degenerate_points.end(), by_coords);

  report.found_count = static_cast<long>(report.points.size());
  for (const auto& cp : report.points) report.euler_sum += cp.morse_index % 2 == 0 ? 1 : -1;
  report.degenerate_detected = !report.degenerate_points.empty();
  report.continuum_suspected =
      static_cast<int>(report.degenerate_points.size()) >= kContinuumThreshold;

  const int chi = sphere_euler_characteristic(n);
  report.certified = !report.degenerate_detected &&
                     report.found_count == report.expected_count &&
                     report.euler_sum == chi && max_residual <= config.grad_tol;

  std::ostringstream diag;
  diag << report.found_count << "/" << report.expected_count
       << " nondegenerate critical points";
  if (report.certified) diag << " certified";
  diag << "; " << report.converged_starts << "/" << report.total_starts
       << " starts converged; euler sum " << report.euler_sum << " (expected "
       << chi << ")";
  if (report.degenerate_detected)
    diag << "; " << report.degenerate_points.size() << " degenerate points";
  if (report.continuum_suspected) diag << "; degenerate continuum suspected";
  if (max_residual > config.grad_tol) diag << "; max residual " << max_residual;
  report.diagnostics = diag.str();
  return report;
}

std::vector<EigenPair> certify(const SolveReport& report, const SymmetricTensor& a,
                               double residual_tol) {
  if (!report.certified) throw CertificationError("report is not certified");
  if (report.n_vars != a.dim() || report.degree != a.order())
    throw DimensionError("report and tensor shapes differ");
  std::vector<EigenPair> pairs;
  pairs.reserve(report.points.size());
  for (const auto& cp : report.points) {
    EigenPair p{cp.x, cp.lagrange_lambda / a.order(), 0.0};
    p.residual = eigen_residual(a, p.x, p.lambda);
    if (p.residual > residual_tol)
      throw CertificationError("eigen residual " + std::to_string(p.residual) +
                               " exceeds tolerance");
    if (std::abs(p.lambda) > 1e-12) {
      const auto ax = realeig::apply(a, p.x);
      double norm = 0.0;
      for (double v : ax) norm += v * v;
      norm = std::sqrt(norm);
      double plus = 0.0, minus = 0.0;
      for (std::size_t i = 0; i < ax.size(); ++i) {
        plus = std::max(plus, std::abs(ax[i] / norm - p.x[i]));
        minus = std::max(minus, std::abs(ax[i] / norm + p.x[i]));
      }
      if (std::min(plus, minus) > 1e-8)
        throw CertificationError("A x^{d-1} is not parallel to x");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace realeig
