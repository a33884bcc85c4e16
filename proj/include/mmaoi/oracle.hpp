#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mmaoi/config.hpp"
#include "mmaoi/index_solver.hpp"

namespace mmaoi {

inline constexpr double kTieTolerance = 1e-12;

/// Exhaustive evaluation of every stationary policy (tau1, tau2) in {0..tau_max}^2.
struct OracleReport {
  int tau_max = 0;
  StationaryPolicy best_policy;
  double best_avg_cost = 0.0;
  /// Average cost of (tau1, tau2) at [tau1 * (tau_max + 1) + tau2].
  std::vector<double> table;
  /// Every policy within kTieTolerance of the minimum, in (tau1, tau2) order.
  std::vector<StationaryPolicy> ties;

  double cost(StationaryPolicy p) const {
    return table.at(static_cast<std::size_t>(p.tau1) * (tau_max + 1) + p.tau2);
  }
  bool is_tied(StationaryPolicy p) const;
};

OracleReport brute_force_optimal(const SchedulingProblem& problem);
OracleReport brute_force_optimal(const LossSurface& surface, const SystemConfig& config);

/// Per-restart-state detail of a Bellman check.
struct BellmanState {
  Modality modality = Modality::M1;
  double h = 0.0;              // h(Delta_{m,re}) of the candidate solution
  int policy_tau = 0;
  double policy_value = 0.0;   // right-hand side at the policy's tau
  int argmin_tau = 0;          // smallest tau attaining the minimum
  double min_value = 0.0;
  double attain_gap = 0.0;     // policy_value - min_value (>= 0)
  double fixed_point_gap = 0.0;  // |min_value - h|
};

struct BellmanCheck {
  bool ok = false;
  double l_opt = 0.0;
  double tol = 0.0;
  BellmanState states[2];
  /// Largest violation across both states (0 when ok).
  double gap = 0.0;
  /// First tau that beats the policy by more than tol, or -1.
  int violating_tau = -1;
  std::string message;
};

/// Certifies (policy, l_opt) against the two-state Bellman optimality equation
///   h(D_m) = min_tau [C_m(tau) - (tau T_m + T_m') l_opt + h(D_m')]
/// with h(Delta_{2,re}) = 0 and h(Delta_{1,re}) = C_1(tau1) - (tau1 T1 + T2) l_opt.
BellmanCheck verify_bellman(const SchedulingProblem& problem, StationaryPolicy policy,
                            double l_opt, double tol);

void to_json(nlohmann::json& j, const StationaryPolicy& p);
void to_json(nlohmann::json& j, const OracleReport& r);
void to_json(nlohmann::json& j, const BellmanCheck& c);

}  // namespace mmaoi
