#include "mmaoi/index_solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mmaoi/errors.hpp"

namespace mmaoi {

namespace {

constexpr int kMaxBisections = 2000;

void require_coverage(const LossSurface& surface, const SystemConfig& config) {
  const auto need = required_domain(config);
  if (surface.boundary_policy() == BoundaryPolicy::Strict && !covers(surface, need)) {
    throw OutOfDomain("surface grid " + std::to_string(surface.d1_max()) + "x" +
                      std::to_string(surface.d2_max()) + " does not cover the required domain " +
                      std::to_string(need.d1) + "x" + std::to_string(need.d2) +
                      " for t1=" + std::to_string(config.t1) + " t2=" +
                      std::to_string(config.t2) + " tau_max=" + std::to_string(config.tau_max));
  }
}

}  // namespace

IndexTable build_index_table(const CycleCostTable& costs) {
  const auto& config = costs.config();
  const int tau_max = config.tau_max;
  std::array<std::vector<IndexEntry>, 2> entries;
  for (Modality m : {Modality::M1, Modality::M2}) {
    const auto c = costs.costs(m);
    const double tm = static_cast<double>(config.transmission_time(m));
    auto& row = entries[index_of(m)];
    row.reserve(static_cast<std::size_t>(tau_max));
    for (int theta = 0; theta < tau_max; ++theta) {
      IndexEntry best{std::numeric_limits<double>::infinity(), 1};
      for (int k = 1; k <= tau_max - theta; ++k) {
        const double ratio = (c[theta + k] - c[theta]) / (static_cast<double>(k) * tm);
        if (ratio < best.gamma) best = {ratio, k};
      }
      row.push_back(best);
    }
  }
  return IndexTable(std::move(entries), tau_max);
}

IndexTable build_index_table(const LossSurface& surface, const SystemConfig& config) {
  require_coverage(surface, config);
  return build_index_table(CycleCostTable(surface, config));
}

int tau_opt(const IndexTable& table, Modality m, double beta) {
  const auto row = table.entries(m);
  for (std::size_t theta = 0; theta < row.size(); ++theta) {
    if (row[theta].gamma >= beta) return static_cast<int>(theta);
  }
  return table.tau_max();
}

StationaryPolicy tau_opt(const IndexTable& table, double beta) {
  return {tau_opt(table, Modality::M1, beta), tau_opt(table, Modality::M2, beta)};
}

GValue evaluate_g(const CycleCostTable& costs, const IndexTable& table, double beta) {
  GValue v;
  v.policy = tau_opt(table, beta);
  v.g1 = costs(Modality::M1, v.policy.tau1) + costs(Modality::M2, v.policy.tau2);
  v.g2 = static_cast<double>(cycle_length(costs.config(), v.policy));
  v.g = v.g1 - beta * v.g2;
  return v;
}

ThresholdSolution solve_threshold(const CycleCostTable& costs, const IndexTable& table,
                                  double bound, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("tolerance must be positive");
  if (!std::isfinite(bound) || bound < 0.0) throw ConfigError("loss bound must be finite and >= 0");
  if (table.tau_max() != costs.config().tau_max) {
    throw ConfigError("index table and cost table disagree on tau_max");
  }

  auto g = [&](double beta) { return evaluate_g(costs, table, beta).g; };

  ThresholdSolution sol;
  double lo = -bound;
  double hi = bound;
  double g_lo = g(lo);
  double g_hi = g(hi);
  if (g_lo < 0.0 || g_hi > 0.0) {
    lo = -2.0 * bound - 1.0;
    hi = 2.0 * bound + 1.0;
    g_lo = g(lo);
    g_hi = g(hi);
    if (g_lo < 0.0 || g_hi > 0.0) {
      throw BracketError("g does not change sign over [" + format_double(lo) + ", " +
                         format_double(hi) + "]");
    }
  }

  auto finish = [&](double root) {
    const auto v = evaluate_g(costs, table, root);
    sol.l_opt = root;
    sol.policy = v.policy;
    sol.residual = std::abs(v.g);
    sol.bracket_lo = lo;
    sol.bracket_hi = hi;
    const int cap = costs.config().tau_max;
    sol.saturated1 = cap > 0 && v.policy.tau1 == cap;
    sol.saturated2 = cap > 0 && v.policy.tau2 == cap;
    return sol;
  };

  // An endpoint can be an exact root (e.g. a constant surface has its root at +bound).
  if (g_hi == 0.0) return finish(hi);
  if (g_lo == 0.0) return finish(lo);

  while (sol.iterations < kMaxBisections) {
    const double mid = lo + 0.5 * (hi - lo);
    const double g_mid = g(mid);
    ++sol.iterations;
    if (g_mid == 0.0 || (hi - lo <= tol && std::abs(g_mid) <= tol)) return finish(mid);
    if (mid <= lo || mid >= hi) return finish(mid);  // bracket exhausted at double resolution
    if (g_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return finish(lo + 0.5 * (hi - lo));
}

SchedulingProblem::SchedulingProblem(LossSurface surface, SystemConfig config)
    : surface_((config.validate(), require_coverage(surface, config), std::move(surface))),
      config_(config),
      costs_(surface_, config_),
      index_(build_index_table(costs_)) {}

ThresholdSolution solve_threshold(const LossSurface& surface, const SystemConfig& config,
                                  double tol) {
  return SchedulingProblem(surface, config).solve(tol);
}

std::pair<StationaryPolicy, double> optimal_policy(const LossSurface& surface,
                                                   const SystemConfig& config, double tol) {
  const auto sol = solve_threshold(surface, config, tol);
  return {sol.policy, sol.l_opt};
}

}  // namespace mmaoi
