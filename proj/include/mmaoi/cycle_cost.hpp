#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mmaoi/config.hpp"
#include "mmaoi/loss_surface.hpp"

namespace mmaoi {

/// Total loss accrued from restart state Delta_{m,re} over `tau` transmissions
/// of `m` followed by one transmission of the other modality, i.e. the cost of
/// the transition Delta_{m,re} -> Delta_{m',re}.
///
/// Summed in slot order (block j outer, offset i inner, then the final
/// other-modality block), which is also the order a simulator visits the slots.
/// Throws OutOfDomain if a Strict surface is too small.
double cycle_cost(const LossSurface& surface, const SystemConfig& config, Modality m, int tau);

/// tau * T_m + T_m'.
std::int64_t cycle_duration(const SystemConfig& config, Modality m, int tau);

/// C_m(0..tau_max) for both modalities, built once per (surface, config).
class CycleCostTable {
 public:
  CycleCostTable(const LossSurface& surface, const SystemConfig& config);

  double operator()(Modality m, int tau) const { return costs_[index_of(m)].at(tau); }
  std::span<const double> costs(Modality m) const noexcept { return costs_[index_of(m)]; }
  const SystemConfig& config() const noexcept { return config_; }

 private:
  SystemConfig config_;
  std::array<std::vector<double>, 2> costs_;
};

/// (C1(tau1) + C2(tau2)) / ((tau1+1) T1 + (tau2+1) T2): long-run average loss
/// of the stationary policy. Throws ConfigError for taus outside 0..tau_max.
double stationary_average_cost(const CycleCostTable& costs, StationaryPolicy policy);
double stationary_average_cost(const LossSurface& surface, const SystemConfig& config,
                               StationaryPolicy policy);

void validate_policy(const SystemConfig& config, StationaryPolicy policy);

}  // namespace mmaoi
