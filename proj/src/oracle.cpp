#include "mmaoi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace mmaoi {

bool OracleReport::is_tied(StationaryPolicy p) const {
  return std::find(ties.begin(), ties.end(), p) != ties.end();
}

OracleReport brute_force_optimal(const SchedulingProblem& problem) {
  const auto& costs = problem.costs();
  OracleReport r;
  r.tau_max = problem.config().tau_max;
  const int n = r.tau_max + 1;
  r.table.reserve(static_cast<std::size_t>(n) * n);
  r.best_avg_cost = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double v = stationary_average_cost(costs, {a, b});
      r.table.push_back(v);
      if (v < r.best_avg_cost) {
        r.best_avg_cost = v;
        r.best_policy = {a, b};
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (r.cost({a, b}) - r.best_avg_cost <= kTieTolerance) r.ties.push_back({a, b});
    }
  }
  return r;
}

OracleReport brute_force_optimal(const LossSurface& surface, const SystemConfig& config) {
  return brute_force_optimal(SchedulingProblem(surface, config));
}

BellmanCheck verify_bellman(const SchedulingProblem& problem, StationaryPolicy policy,
                            double l_opt, double tol) {
  const auto& config = problem.config();
  const auto& costs = problem.costs();
  validate_policy(config, policy);

  BellmanCheck check;
  check.l_opt = l_opt;
  check.tol = tol;

  auto rhs = [&](Modality m, int tau) {
    return costs(m, tau) - static_cast<double>(cycle_duration(config, m, tau)) * l_opt;
  };
  double h[2];
  h[index_of(Modality::M2)] = 0.0;
  h[index_of(Modality::M1)] = rhs(Modality::M1, policy.tau1);

  bool ok = true;
  for (Modality m : {Modality::M1, Modality::M2}) {
    auto& s = check.states[index_of(m)];
    s.modality = m;
    s.h = h[index_of(m)];
    s.policy_tau = policy.tau(m);
    const double next_h = h[index_of(other(m))];
    s.policy_value = rhs(m, s.policy_tau) + next_h;
    s.min_value = std::numeric_limits<double>::infinity();
    for (int tau = 0; tau <= config.tau_max; ++tau) {
      const double v = rhs(m, tau) + next_h;
      if (v < s.min_value) {
        s.min_value = v;
        s.argmin_tau = tau;
      }
      if (check.violating_tau < 0 && v < s.policy_value - tol) check.violating_tau = tau;
    }
    s.attain_gap = s.policy_value - s.min_value;
    s.fixed_point_gap = std::abs(s.min_value - s.h);
    check.gap = std::max({check.gap, s.attain_gap, s.fixed_point_gap});
    if (s.attain_gap > tol || s.fixed_point_gap > tol) ok = false;
  }
  check.ok = ok;
  if (ok) {
    check.gap = 0.0;
    check.message = "Bellman equation satisfied";
  } else {
    check.message = "Bellman equation violated: gap " + format_double(check.gap);
    if (check.violating_tau >= 0) {
      check.message += ", tau " + std::to_string(check.violating_tau) + " beats the policy";
    }
  }
  return check;
}

void to_json(nlohmann::json& j, const StationaryPolicy& p) {
  j = nlohmann::json{{"tau1", p.tau1}, {"tau2", p.tau2}};
}

void to_json(nlohmann::json& j, const OracleReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a <= r.tau_max; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b <= r.tau_max; ++b) row.push_back(r.cost({a, b}));
    rows.push_back(std::move(row));
  }
  j = nlohmann::json{{"best_policy", r.best_policy},
                     {"best_avg_cost", r.best_avg_cost},
                     {"ties", r.ties},
                     {"table", std::move(rows)}};
}

void to_json(nlohmann::json& j, const BellmanCheck& c) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : c.states) {
    states.push_back({{"modality", static_cast<int>(s.modality)},
                      {"h", s.h},
                      {"policy_tau", s.policy_tau},
                      {"policy_value", s.policy_value},
                      {"argmin_tau", s.argmin_tau},
                      {"min_value", s.min_value},
                      {"attain_gap", s.attain_gap},
                      {"fixed_point_gap", s.fixed_point_gap}});
  }
  j = nlohmann::json{{"ok", c.ok},           {"l_opt", c.l_opt},
                     {"tol", c.tol},         {"gap", c.gap},
                     {"violating_tau", c.violating_tau}, {"message", c.message},
                     {"states", std::move(states)}};
}

}  // namespace mmaoi
