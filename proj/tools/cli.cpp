#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "realeig/constructor.hpp"
#include "realeig/errors.hpp"
#include "realeig/io.hpp"
#include "realeig/solver.hpp"
#include "realeig/tensor.hpp"

namespace realeig::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct ConstructOptions {
  int d = 0;
  int n = 0;
  double eps_start = 0.1;
  double eps_floor = 1e-6;
  std::uint64_t seed = kDefaultSeed;
  int starts = 50;
  std::string out;
};

struct SolveOptions {
  std::string path;
  int starts = 50;
  std::uint64_t seed = kDefaultSeed;
};

struct PlotOptions {
  std::string path;
  int grid = 90;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

std::ostream& print_vector(std::ostream& os, const std::vector<double>& x) {
  os << "[";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  return os << "]";
}

void print_census(std::ostream& os, const SolveReport& r) {
  std::vector<long> census(r.n_vars, 0);
  for (const auto& p : r.points) ++census[p.morse_index];
  os << "index census:";
  for (std::size_t k = 0; k < census.size(); ++k) os << " " << k << ":" << census[k];
  os << "\neuler sum: " << r.euler_sum << " (expected "
     << sphere_euler_characteristic(r.n_vars) << ")\n";
}

SolverConfig solver_config(int starts, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.starts_per_expected_point = starts;
  cfg.seed = seed;
  return cfg;
}

int cmd_construct(const ConstructOptions& o, std::ostream& out, std::ostream& err) {
  if (o.d < 1 || o.n < 2) {
    err << "construct needs --d >= 1 and --n >= 2\n";
    return kBadInput;
  }
  ConstructionResult result;
  try {
    const auto cfg = solver_config(o.starts, o.seed);
    if (o.d == 1) {
      result = construct_linear(o.n, cfg);
    } else {
      ConstructionParams params;
      params.d = o.d;
      params.n_target = o.n;
      params.epsilon_schedule.start = o.eps_start;
      params.epsilon_schedule.floor = o.eps_floor;
      params.solver = cfg;
      result = construct(params);
    }
  } catch (const EpsilonExhaustedError& e) {
    err << "construction failed: " << e.what() << "\n" << e.diagnostics() << "\n";
    return kCertificationFailure;
  }

  for (const auto& level : result.levels) {
    const auto& c = level.certificate;
    out << "n=" << level.n << " epsilon=";
    if (level.epsilon_used) {
      out << *level.epsilon_used;
    } else {
      out << "-";
    }
    out << ": " << c.count << "/" << c.expected << (c.certified ? " certified" : " FAILED")
        << ", min margin " << c.min_margin << ", max residual " << c.max_residual
        << ", euler sum " << c.euler_sum << "\n";
  }
  const auto& last = result.levels.back();
  out << "polynomial: " << format(last.polynomial) << "\n";
  out << "critical points: " << last.certificate.count << "\n";
  if (!o.out.empty()) {
    io::write_json_file(o.out, io::to_json(result));
    out << "wrote " << o.out << "\n";
  }
  return kSuccess;
}

int cmd_verify(const SolveOptions& o, bool list_pairs, std::ostream& out,
               std::ostream& err) {
  const auto input = io::load_input(o.path);
  const auto& f = input.polynomial;
  const auto report = find_critical_points(f, solver_config(o.starts, o.seed));
  out << report.found_count << "/" << report.expected_count
      << (report.certified ? " certified" : " not certified") << "\n";
  out << report.diagnostics << "\n";
  print_census(out, report);
  if (list_pairs) {
    const auto a = poly_to_tensor(f);
    out << "eigenpairs (x, lambda, residual, morse index):\n";
    for (const auto& p : report.points) {
      const double lambda = p.lagrange_lambda / f.degree();
      print_vector(out, p.x) << "  " << lambda << "  " << eigen_residual(a, p.x, lambda)
                             << "  " << p.morse_index << "\n";
    }
  }
  if (!report.certified) {
    err << "certification failed: " << report.diagnostics << "\n";
    return kCertificationFailure;
  }
  return kSuccess;
}

int cmd_rank1(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const auto input = io::load_input(o.path);
  const auto& f = input.polynomial;
  const auto report = find_critical_points(f, solver_config(o.starts, o.seed));
  if (!report.certified) {
    err << "uncertified input: " << report.diagnostics << "\n";
    return kBadInput;
  }
  const auto a = poly_to_tensor(f);
  auto pairs = certify(report, a);
  const auto best = best_rank_one(a, pairs);

  out << "lambda* = " << best.lambda << "\n";
  out << "x* = ";
  print_vector(out, best.x) << "\n";
  out << "dist = " << best.dist << "\n";
  out << "dist^2 (||A||^2 - lambda^2) = " << best.dist_squared_closed_form << "\n";
  out << "dist^2 (direct) = " << best.dist_squared_direct << "\n";
  if (best.tie) out << "note: |lambda*| is attained by several eigenpoints\n";

  std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& l, const EigenPair& r) {
    return std::abs(l.lambda) > std::abs(r.lambda);
  });
  out << "eigenvalues by |lambda| (lambda, x):\n";
  for (const auto& p : pairs) {
    out << p.lambda << "  ";
    print_vector(out, p.x) << "\n";
  }

  const double gap = std::abs(best.dist_squared_closed_form - best.dist_squared_direct);
  if (gap > 1e-10 * std::max(1.0, best.dist_squared_closed_form)) {
    err << "closed-form and direct rank-one distances disagree by " << gap << "\n";
    return kCertificationFailure;
  }
  return kSuccess;
}

void write_plot(const PlotOptions& o, const HomogeneousPolynomial& f,
                const SolveReport& report, std::ostream& os) {
  os << std::setprecision(17);
  os << "theta,phi,abs_f\n";
  const int rows = o.grid;
  const int cols = 2 * o.grid;
  for (int i = 0; i < rows; ++i) {
    const double theta = rows == 1 ? 0.0 : std::numbers::pi * i / (rows - 1);
    for (int j = 0; j < cols; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / cols;
      const double x[3] = {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                           std::cos(theta)};
      os << theta << "," << phi << "," << std::abs(f.eval(x)) << "\n";
    }
  }
  os << "# critical points\n";
  os << "x1,x2,x3,value,morse_index\n";
  for (const auto& p : report.points) {
    os << p.x[0] << "," << p.x[1] << "," << p.x[2] << "," << p.value << ","
       << p.morse_index << "\n";
  }
}

int cmd_plotdata(const PlotOptions& o, std::ostream& out, std::ostream& err) {
  if (o.grid <= 0) {
    err << "--grid must be positive\n";
    return kBadInput;
  }
  const auto input = io::load_input(o.path);
  const auto& f = input.polynomial;
  if (f.n_vars() != 3) {
    err << "plot export supports the 2-sphere only (n = 3), got n = " << f.n_vars() << "\n";
    return kBadInput;
  }
  const auto report = find_critical_points(f, solver_config(50, o.seed));
  if (o.out.empty()) {
    write_plot(o, f, report, out);
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "cannot write " << o.out << "\n";
      return kBadInput;
    }
    write_plot(o, f, report, file);
    out << "wrote " << o.out << " (" << report.points.size() << " critical points)\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  out << std::setprecision(17);
  CLI::App app{"Real symmetric tensors with only real eigenvectors"};
  app.require_subcommand(1);

  ConstructOptions copt;
  auto* construct_cmd = app.add_subcommand(
      "construct", "build and certify a harmonic polynomial with 2 m_{d,n} critical points");
  construct_cmd->add_option("--d", copt.d, "degree (tensor order)")->required();
  construct_cmd->add_option("--n", copt.n, "number of variables (tensor dimension)")->required();
  construct_cmd->add_option("--eps-start", copt.eps_start, "first epsilon tried");
  construct_cmd->add_option("--eps-floor", copt.eps_floor, "smallest epsilon tried");
  construct_cmd->add_option("--seed", copt.seed, "solver seed");
  construct_cmd->add_option("--starts", copt.starts, "starts per expected critical point");
  construct_cmd->add_option("--out", copt.out, "write the construction result here");

  SolveOptions vopt;
  auto add_solve = [](CLI::App* cmd, SolveOptions& o) {
    cmd->add_option("path", o.path, "polynomial, tensor or construction file")->required();
    cmd->add_option("--starts", o.starts, "starts per expected critical point");
    cmd->add_option("--seed", o.seed, "solver seed");
  };
  auto* verify_cmd = app.add_subcommand("verify", "re-certify the critical points of a file");
  add_solve(verify_cmd, vopt);
  auto* eigen_cmd = app.add_subcommand("eigen", "verify and list eigenpairs");
  add_solve(eigen_cmd, vopt);
  auto* rank1_cmd = app.add_subcommand("rank1", "best rank-one approximation");
  add_solve(rank1_cmd, vopt);

  PlotOptions popt;
  auto* plot_cmd = app.add_subcommand("plotdata", "export |f| on a theta/phi grid of S^2");
  plot_cmd->add_option("path", popt.path, "polynomial, tensor or construction file")->required();
  plot_cmd->add_option("--grid", popt.grid, "theta samples N (phi gets 2N)");
  plot_cmd->add_option("--seed", popt.seed, "solver seed for the markers");
  plot_cmd->add_option("--out", popt.out, "write the grid here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kBadInput;
  }

  try {
    if (*construct_cmd) return cmd_construct(copt, out, err);
    if (*verify_cmd) return cmd_verify(vopt, false, out, err);
    if (*eigen_cmd) return cmd_verify(vopt, true, out, err);
    if (*rank1_cmd) return cmd_rank1(vopt, out, err);
    if (*plot_cmd) return cmd_plotdata(popt, out, err);
  } catch (const CertificationError& e) {
    err << "certification error: " << e.what() << "\n";
    return kCertificationFailure;
  } catch (const realeig::Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace realeig::cli
