#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "mmaoi/config.hpp"
#include "mmaoi/cycle_cost.hpp"
#include "mmaoi/loss_surface.hpp"

namespace mmaoi {

inline constexpr double kDefaultTol = 1e-9;

/// gamma_m(theta) with the smallest k attaining the minimum.
struct IndexEntry {
  double gamma = 0.0;
  int witness = 1;
};

/// Index functions of both modalities for theta in 0..tau_max-1.
///
///   gamma_m(theta) = min_{k in 1..tau_max-theta} (C_m(theta+k) - C_m(theta)) / (k T_m)
///
/// i.e. the cheapest average cost per extra slot of extending a run of m
/// beyond theta transmissions. Empty when tau_max == 0.
class IndexTable {
 public:
  IndexTable() = default;
  IndexTable(std::array<std::vector<IndexEntry>, 2> entries, int tau_max)
      : entries_(std::move(entries)), tau_max_(tau_max) {}

  int tau_max() const noexcept { return tau_max_; }
  bool empty() const noexcept { return tau_max_ == 0; }
  std::span<const IndexEntry> entries(Modality m) const noexcept { return entries_[index_of(m)]; }
  double gamma(Modality m, int theta) const { return entries_[index_of(m)].at(theta).gamma; }
  int witness(Modality m, int theta) const { return entries_[index_of(m)].at(theta).witness; }

 private:
  std::array<std::vector<IndexEntry>, 2> entries_;
  int tau_max_ = 0;
};

IndexTable build_index_table(const CycleCostTable& costs);

/// Smallest theta with gamma_m(theta) >= beta, or tau_max when there is none.
/// The comparison is an exact >=.
int tau_opt(const IndexTable& table, Modality m, double beta);
StationaryPolicy tau_opt(const IndexTable& table, double beta);

/// g(beta) = g1(beta) - beta * g2(beta), together with its parts and the
/// threshold decisions it was evaluated at.
struct GValue {
  double g = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  StationaryPolicy policy;
};

GValue evaluate_g(const CycleCostTable& costs, const IndexTable& table, double beta);

inline double g_value(const CycleCostTable& costs, const IndexTable& table, double beta) {
  return evaluate_g(costs, table, beta).g;
}

struct ThresholdSolution {
  double l_opt = 0.0;
  StationaryPolicy policy;
  int iterations = 0;
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  /// The policy sits at tau_max for modality 1 / 2 (the cap may bind).
  bool saturated1 = false;
  bool saturated2 = false;
};

/// Bisection for the root of g. Starts from [-bound, bound] (every stationary
/// average cost lies there) and widens once to [-2 bound - 1, 2 bound + 1] if
/// rounding leaves the endpoints on the wrong side. Stops once the bracket is
/// no wider than `tol` and |g(midpoint)| <= tol, and returns the midpoint with
/// the threshold policy evaluated there. Throws BracketError, ConfigError.
ThresholdSolution solve_threshold(const CycleCostTable& costs, const IndexTable& table,
                                  double bound, double tol = kDefaultTol);

/// Surface, configuration and the tables derived from them.
class SchedulingProblem {
 public:
  /// Throws OutOfDomain if a Strict surface does not cover required_domain(config).
  SchedulingProblem(LossSurface surface, SystemConfig config);

  const LossSurface& surface() const noexcept { return surface_; }
  const SystemConfig& config() const noexcept { return config_; }
  const CycleCostTable& costs() const noexcept { return costs_; }
  const IndexTable& index() const noexcept { return index_; }

  GValue g(double beta) const { return evaluate_g(costs_, index_, beta); }
  ThresholdSolution solve(double tol = kDefaultTol) const {
    return solve_threshold(costs_, index_, surface_.bound(), tol);
  }

 private:
  LossSurface surface_;
  SystemConfig config_;
  CycleCostTable costs_;
  IndexTable index_;
};

IndexTable build_index_table(const LossSurface& surface, const SystemConfig& config);

ThresholdSolution solve_threshold(const LossSurface& surface, const SystemConfig& config,
                                  double tol = kDefaultTol);

/// The optimal stationary policy and the optimal average loss.
std::pair<StationaryPolicy, double> optimal_policy(const LossSurface& surface,
                                                   const SystemConfig& config,
                                                   double tol = kDefaultTol);

}  // namespace mmaoi
