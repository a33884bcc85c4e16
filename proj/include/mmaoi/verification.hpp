#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mmaoi/index_solver.hpp"
#include "mmaoi/oracle.hpp"

namespace mmaoi {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// False when the property does not apply to this instance (counts as passed).
  bool applicable = true;
  std::string detail;
};

struct VerifyOptions {
  double solver_tol = kDefaultTol;
  double equivalence_tol = 1e-8;
  double bellman_tol = 1e-8;
  int beta_grid_points = 200;
  double concavity_tol = 1e-10;
  int random_betas = 50;
  std::uint64_t seed = 0;
  /// Added to l_opt before the oracle and Bellman checks (test hook).
  double perturb = 0.0;
};

struct VerifyReport {
  ThresholdSolution solution;
  OracleReport oracle;
  BellmanCheck bellman;
  std::vector<CheckResult> checks;
  bool passed = false;
};

/// Solves the instance and runs every property check on it.
VerifyReport verify_instance(const SchedulingProblem& problem, const VerifyOptions& options);

/// g on `points` equally spaced betas over [-bound, bound]: strictly
/// decreasing, midpoint concave within `concavity_tol`, exactly one sign change.
CheckResult check_g_shape(const SchedulingProblem& problem, int points, double concavity_tol);

/// tau_opt(beta) is the smallest minimizer of C_m(tau) - tau T_m beta over
/// 0..tau_max for `count` pseudo-random betas per modality.
CheckResult check_threshold_argmin(const SchedulingProblem& problem, int count,
                                   std::uint64_t seed);

/// tau_opt(beta) non-decreasing in beta along the g grid.
CheckResult check_tau_opt_monotone(const SchedulingProblem& problem, int points);

/// For T1 = T2 = 1 and a non-decreasing surface, gamma_1(theta) = L(1, theta + 3).
CheckResult check_monotone_reduction(const SchedulingProblem& problem);

/// gamma_m(theta) against the block decomposition C_a + C_b for the modality
/// with the longer (or equal) transmission time.
CheckResult check_asymmetric_index(const SchedulingProblem& problem);

/// C_m(theta + k) - C_m(theta) written as a sum with the common terms cancelled,
/// valid when T_m >= T_m'.
double index_numerator_by_blocks(const LossSurface& surface, const SystemConfig& config,
                                 Modality m, int theta, int k);

/// Uniform double in [lo, hi) from one 64-bit mt19937_64 draw (53-bit mantissa).
double uniform_real(std::uint64_t draw, double lo, double hi);

void to_json(nlohmann::json& j, const CheckResult& c);

}  // namespace mmaoi
