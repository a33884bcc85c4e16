#include "mmaoi/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mmaoi/errors.hpp"

namespace mmaoi {

double uniform_real(std::uint64_t draw, double lo, double hi) {
  const double u = static_cast<double>(draw >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

namespace {

std::vector<double> beta_grid(double bound, int points) {
  std::vector<double> betas;
  betas.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    betas.push_back(std::lerp(-bound, bound, t));
  }
  return betas;
}

int smallest_argmin(const CycleCostTable& costs, Modality m, double beta) {
  const double tm = static_cast<double>(costs.config().transmission_time(m));
  const auto c = costs.costs(m);
  int best = 0;
  double best_value = c[0];
  for (int tau = 1; tau < static_cast<int>(c.size()); ++tau) {
    const double v = c[tau] - static_cast<double>(tau) * tm * beta;
    if (v < best_value) {
      best_value = v;
      best = tau;
    }
  }
  return best;
}

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, true, std::move(detail)};
}

CheckResult not_applicable(std::string name, std::string detail) {
  return {std::move(name), true, false, std::move(detail)};
}

}  // namespace

CheckResult check_g_shape(const SchedulingProblem& problem, int points, double concavity_tol) {
  const std::string name = "g_shape";
  const double bound = problem.surface().bound();
  if (points < 3) throw ConfigError("g grid needs at least 3 points");
  if (bound == 0.0) return not_applicable(name, "zero surface: bracket collapses to a point");

  const auto betas = beta_grid(bound, points);
  std::vector<double> g;
  g.reserve(betas.size());
  for (double b : betas) g.push_back(problem.g(b).g);

  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (!(g[i + 1] - g[i] < 0.0)) {
      return fail(name, "g not strictly decreasing at beta=" + format_double(betas[i]));
    }
  }
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    const double chord = 0.5 * (g[i - 1] + g[i + 1]);
    if (g[i] < chord - concavity_tol) {
      return fail(name, "midpoint concavity violated at beta=" + format_double(betas[i]) +
                            " by " + format_double(chord - g[i]));
    }
  }
  int crossings = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0.0) ++crossings;
    if (i + 1 < g.size() && g[i] > 0.0 && g[i + 1] < 0.0) ++crossings;
  }
  if (crossings != 1) {
    return fail(name, "g changes sign " + std::to_string(crossings) + " times on the grid");
  }
  return pass(name, std::to_string(points) + " points over [-M, M], one sign change");
}

CheckResult check_threshold_argmin(const SchedulingProblem& problem, int count,
                                   std::uint64_t seed) {
  const std::string name = "threshold_argmin";
  const auto& table = problem.index();
  double span = problem.surface().bound();
  for (Modality m : {Modality::M1, Modality::M2}) {
    for (const auto& e : table.entries(m)) span = std::max(span, std::abs(e.gamma));
  }
  span += 1.0;

  std::mt19937_64 rng(seed);
  int base = 0;
  int interior = 0;
  int saturated = 0;
  const int cap = problem.config().tau_max;
  for (int n = 0; n < count; ++n) {
    const double beta = uniform_real(rng(), -span, span);
    for (Modality m : {Modality::M1, Modality::M2}) {
      const int got = tau_opt(table, m, beta);
      const int want = smallest_argmin(problem.costs(), m, beta);
      if (got != want) {
        std::ostringstream os;
        os << "modality " << static_cast<int>(m) << " beta=" << format_double(beta)
           << ": tau_opt=" << got << " but exhaustive argmin=" << want;
        return fail(name, os.str());
      }
      if (cap > 0) {
        if (got == 0) {
          ++base;
        } else if (got == cap) {
          ++saturated;
        } else {
          ++interior;
        }
      }
    }
  }
  return pass(name, "base=" + std::to_string(base) + " interior=" + std::to_string(interior) +
                        " saturated=" + std::to_string(saturated));
}

CheckResult check_tau_opt_monotone(const SchedulingProblem& problem, int points) {
  const std::string name = "tau_opt_monotone";
  const double bound = problem.surface().bound() + 1.0;
  const auto betas = beta_grid(bound, points);
  for (Modality m : {Modality::M1, Modality::M2}) {
    int prev = -1;
    for (double b : betas) {
      const int t = tau_opt(problem.index(), m, b);
      if (t < prev) {
        return fail(name, "tau_opt decreases at beta=" + format_double(b) + " for modality " +
                              std::to_string(static_cast<int>(m)));
      }
      prev = t;
    }
  }
  return pass(name, "non-decreasing on " + std::to_string(points) + " betas");
}

CheckResult check_monotone_reduction(const SchedulingProblem& problem) {
  const std::string name = "monotone_reduction";
  const auto& config = problem.config();
  const auto& surface = problem.surface();
  if (config.t1 != 1 || config.t2 != 1) return not_applicable(name, "needs T1 = T2 = 1");
  if (config.tau_max == 0) return not_applicable(name, "tau_max = 0");
  const auto need = required_domain(config);
  for (std::int64_t d1 = 1; d1 <= need.d1; ++d1) {
    for (std::int64_t d2 = 1; d2 <= need.d2; ++d2) {
      const double v = surface.eval(d1, d2);
      if ((d1 > 1 && v < surface.eval(d1 - 1, d2)) || (d2 > 1 && v < surface.eval(d1, d2 - 1))) {
        return not_applicable(name, "surface is not non-decreasing");
      }
    }
  }
  double scale = 1.0;
  for (double c : problem.costs().costs(Modality::M1)) scale = std::max(scale, std::abs(c));
  const double tol = 1e-12 * scale;
  for (int theta = 0; theta < config.tau_max; ++theta) {
    const double gamma = problem.index().gamma(Modality::M1, theta);
    const double expect = surface.eval(1, theta + 3);
    if (std::abs(gamma - expect) > tol) {
      return fail(name, "gamma_1(" + std::to_string(theta) + ")=" + format_double(gamma) +
                            " but L(1," + std::to_string(theta + 3) + ")=" + format_double(expect));
    }
  }
  return pass(name, "gamma_1(theta) = L(1, theta+3) for all theta");
}

double index_numerator_by_blocks(const LossSurface& surface, const SystemConfig& config,
                                 Modality m, int theta, int k) {
  const std::int64_t t1 = config.t1;
  const std::int64_t t2 = config.t2;
  const std::int64_t th = theta;
  if (k < 1) throw ConfigError("k must be >= 1");
  double ca = 0.0;
  double cb = 0.0;
  if (m == Modality::M1) {
    if (t1 < t2) throw ConfigError("block decomposition of gamma_1 needs T1 >= T2");
    for (std::int64_t j = 1; j <= k - 1; ++j) {
      for (std::int64_t i = 0; i < t1; ++i) ca += surface.eval(t1 + i, (th + 1 + j) * t1 + t2 + i);
    }
    for (std::int64_t i = 0; i < t2; ++i) cb += surface.eval(t1 + i, (th + 1 + k) * t1 + t2 + i);
    for (std::int64_t i = t2; i < t1; ++i) cb += surface.eval(t1 + i, (th + 1) * t1 + t2 + i);
  } else {
    if (t2 < t1) throw ConfigError("block decomposition of gamma_2 needs T2 >= T1");
    for (std::int64_t j = 1; j <= k - 1; ++j) {
      for (std::int64_t i = 0; i < t2; ++i) ca += surface.eval(t1 + (th + 1 + j) * t2 + i, t2 + i);
    }
    for (std::int64_t i = 0; i < t1; ++i) cb += surface.eval(t1 + (th + 1 + k) * t2 + i, t2 + i);
    for (std::int64_t i = t1; i < t2; ++i) cb += surface.eval(t1 + (th + 1) * t2 + i, t2 + i);
  }
  return ca + cb;
}

CheckResult check_asymmetric_index(const SchedulingProblem& problem) {
  const std::string name = "asymmetric_index";
  const auto& config = problem.config();
  if (config.tau_max == 0) return not_applicable(name, "tau_max = 0");
  int checked = 0;
  for (Modality m : {Modality::M1, Modality::M2}) {
    if (config.transmission_time(m) < config.transmission_time(other(m))) continue;
    double scale = 1.0;
    for (double c : problem.costs().costs(m)) scale = std::max(scale, std::abs(c));
    const double tol = 1e-9 * scale;
    const double tm = static_cast<double>(config.transmission_time(m));
    for (int theta = 0; theta < config.tau_max; ++theta) {
      const auto entry = problem.index().entries(m)[static_cast<std::size_t>(theta)];
      double best = std::numeric_limits<double>::infinity();
      for (int k = 1; k <= config.tau_max - theta; ++k) {
        best = std::min(best, index_numerator_by_blocks(problem.surface(), config, m, theta, k) /
                                  (static_cast<double>(k) * tm));
      }
      const double at_witness =
          index_numerator_by_blocks(problem.surface(), config, m, theta, entry.witness) /
          (static_cast<double>(entry.witness) * tm);
      if (std::abs(best - entry.gamma) > tol || std::abs(at_witness - entry.gamma) > tol) {
        return fail(name, "modality " + std::to_string(static_cast<int>(m)) + " theta=" +
                              std::to_string(theta) + ": index " + format_double(entry.gamma) +
                              " vs block form " + format_double(best));
      }
      ++checked;
    }
  }
  return pass(name, std::to_string(checked) + " index values match the block decomposition");
}

VerifyReport verify_instance(const SchedulingProblem& problem, const VerifyOptions& options) {
  VerifyReport report;
  report.solution = problem.solve(options.solver_tol);
  report.oracle = brute_force_optimal(problem);
  const double l = report.solution.l_opt + options.perturb;

  {
    const double diff = std::abs(l - report.oracle.best_avg_cost);
    const bool tied = report.oracle.is_tied(report.solution.policy);
    CheckResult c{"oracle_equivalence", diff <= options.equivalence_tol && tied, true,
                  "|l_opt - brute force| = " + format_double(diff) +
                      (tied ? ", policy in argmin set" : ", policy NOT in argmin set")};
    report.checks.push_back(std::move(c));
  }
  report.checks.push_back({"solver_residual", report.solution.residual <= options.solver_tol, true,
                           "|g(l_opt)| = " + format_double(report.solution.residual)});
  report.bellman = verify_bellman(problem, report.solution.policy, l, options.bellman_tol);
  report.checks.push_back({"bellman", report.bellman.ok, true, report.bellman.message});
  report.checks.push_back(check_g_shape(problem, options.beta_grid_points, options.concavity_tol));
  report.checks.push_back(check_threshold_argmin(problem, options.random_betas, options.seed));
  report.checks.push_back(check_tau_opt_monotone(problem, options.beta_grid_points));
  report.checks.push_back(check_monotone_reduction(problem));
  report.checks.push_back(check_asymmetric_index(problem));

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  return report;
}

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = nlohmann::json{
      {"name", c.name}, {"pass", c.passed}, {"applicable", c.applicable}, {"detail", c.detail}};
}

}  // namespace mmaoi
