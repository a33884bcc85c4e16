#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace mmaoi {

enum class Modality : int { M1 = 1, M2 = 2 };

constexpr Modality other(Modality m) noexcept {
  return m == Modality::M1 ? Modality::M2 : Modality::M1;
}

constexpr int index_of(Modality m) noexcept { return m == Modality::M1 ? 0 : 1; }

/// AoI vector (delta1, delta2). Both components are positive slot counts.
struct AoiVector {
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;

  friend constexpr bool operator==(const AoiVector&, const AoiVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const AoiVector& v);

/// Transmission times of the two modalities and the cap on consecutive
/// same-modality transmissions at a restart state.
struct SystemConfig {
  std::int64_t t1 = 1;
  std::int64_t t2 = 1;
  int tau_max = 50;

  std::int64_t transmission_time(Modality m) const noexcept {
    return m == Modality::M1 ? t1 : t2;
  }

  /// Throws ConfigError unless t1, t2 >= 1 and tau_max >= 0 (with sane upper limits).
  void validate() const;

  friend constexpr bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

/// Number of consecutive transmissions chosen at each restart state.
struct StationaryPolicy {
  int tau1 = 0;
  int tau2 = 0;

  int tau(Modality m) const noexcept { return m == Modality::M1 ? tau1 : tau2; }

  friend constexpr auto operator<=>(const StationaryPolicy&, const StationaryPolicy&) = default;
};

std::ostream& operator<<(std::ostream& os, const StationaryPolicy& p);

/// AoI vector right after a delivery of `m` that followed transmissions of
/// the other modality: (T1, T1+T2) for M1 and (T1+T2, T2) for M2.
constexpr AoiVector restart_state(const SystemConfig& config, Modality m) noexcept {
  return m == Modality::M1 ? AoiVector{config.t1, config.t1 + config.t2}
                           : AoiVector{config.t1 + config.t2, config.t2};
}

/// Length in slots of one full cycle of a stationary policy.
constexpr std::int64_t cycle_length(const SystemConfig& config, StationaryPolicy p) noexcept {
  return (static_cast<std::int64_t>(p.tau1) + 1) * config.t1 +
         (static_cast<std::int64_t>(p.tau2) + 1) * config.t2;
}

}  // namespace mmaoi
