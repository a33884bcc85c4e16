#include "mmaoi/cycle_cost.hpp"

#include <string>

#include "mmaoi/errors.hpp"

namespace mmaoi {

double cycle_cost(const LossSurface& surface, const SystemConfig& config, Modality m, int tau) {
  config.validate();
  if (tau < 0 || tau > config.tau_max) {
    throw ConfigError("tau " + std::to_string(tau) + " outside 0.." +
                      std::to_string(config.tau_max));
  }
  const std::int64_t t1 = config.t1;
  const std::int64_t t2 = config.t2;
  const std::int64_t k = tau;
  double total = 0.0;
  if (m == Modality::M1) {
    for (std::int64_t j = 1; j <= k; ++j) {
      for (std::int64_t i = 0; i < t1; ++i) total += surface.eval(t1 + i, j * t1 + t2 + i);
    }
    for (std::int64_t i = 0; i < t2; ++i) total += surface.eval(t1 + i, (k + 1) * t1 + t2 + i);
  } else {
    for (std::int64_t j = 1; j <= k; ++j) {
      for (std::int64_t i = 0; i < t2; ++i) total += surface.eval(t1 + j * t2 + i, t2 + i);
    }
    for (std::int64_t i = 0; i < t1; ++i) total += surface.eval(t1 + (k + 1) * t2 + i, t2 + i);
  }
  return total;
}

std::int64_t cycle_duration(const SystemConfig& config, Modality m, int tau) {
  return static_cast<std::int64_t>(tau) * config.transmission_time(m) +
         config.transmission_time(other(m));
}

CycleCostTable::CycleCostTable(const LossSurface& surface, const SystemConfig& config)
    : config_(config) {
  config.validate();
  for (Modality m : {Modality::M1, Modality::M2}) {
    auto& row = costs_[index_of(m)];
    row.reserve(static_cast<std::size_t>(config.tau_max) + 1);
    for (int tau = 0; tau <= config.tau_max; ++tau) row.push_back(cycle_cost(surface, config, m, tau));
  }
}

void validate_policy(const SystemConfig& config, StationaryPolicy policy) {
  if (policy.tau1 < 0 || policy.tau1 > config.tau_max || policy.tau2 < 0 ||
      policy.tau2 > config.tau_max) {
    throw ConfigError("policy (" + std::to_string(policy.tau1) + "," +
                      std::to_string(policy.tau2) + ") outside 0.." +
                      std::to_string(config.tau_max));
  }
}

double stationary_average_cost(const CycleCostTable& costs, StationaryPolicy policy) {
  validate_policy(costs.config(), policy);
  const double total = costs(Modality::M1, policy.tau1) + costs(Modality::M2, policy.tau2);
  return total / static_cast<double>(cycle_length(costs.config(), policy));
}

double stationary_average_cost(const LossSurface& surface, const SystemConfig& config,
                               StationaryPolicy policy) {
  validate_policy(config, policy);
  const double total = cycle_cost(surface, config, Modality::M1, policy.tau1) +
                       cycle_cost(surface, config, Modality::M2, policy.tau2);
  return total / static_cast<double>(cycle_length(config, policy));
}

}  // namespace mmaoi
