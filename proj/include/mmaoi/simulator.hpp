#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mmaoi/config.hpp"
#include "mmaoi/loss_surface.hpp"

namespace mmaoi {

struct InFlight {
  Modality modality = Modality::M1;
  std::int64_t start = 0;
  std::int64_t delivery = 0;
};

/// Slot t, the AoI vector Delta(t), and the transmission occupying the channel.
struct SimState {
  std::int64_t t = 0;
  AoiVector aoi;
  std::optional<InFlight> in_flight;
};

/// Advances one slot. If the in-flight transmission delivers at t+1, the
/// delivered modality's AoI becomes its T_m and the other grows by one;
/// otherwise both grow by one.
SimState step_aoi(const SimState& state, const SystemConfig& config);

/// Runs (tau1, tau2) from a restart state: tau_m transmissions of m, then one
/// of the other modality, forever.
struct IndexThreshold {
  StationaryPolicy taus;
};

/// Alternates modalities every transmission. The first pick is the modality
/// with the larger AoI (modality 1 on a tie), so from Delta_{1,re} it starts
/// with modality 2 and coincides with IndexThreshold{(0, 0)}.
struct RoundRobin {};

/// Each decision picks modality 1 or 2 with probability 1/2. The stream is
/// std::mt19937_64 seeded with `seed`; one 64-bit draw per decision, top bit
/// set -> modality 2. Both are fully specified by the C++ standard, so traces
/// are identical across platforms.
struct UniformRandom {
  std::uint64_t seed = 0;
};

using PolicyKind = std::variant<IndexThreshold, RoundRobin, UniformRandom>;

/// "index", "rr" or "rand".
std::string policy_name(const PolicyKind& policy);

struct SlotRecord {
  std::int64_t t = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  double loss = 0.0;
};

struct TransmissionRecord {
  std::int64_t n = 0;
  Modality modality = Modality::M1;
  std::int64_t start = 0;
  std::int64_t delivery = 0;
};

struct SimSummary {
  std::string policy;
  std::int64_t horizon = 0;
  std::optional<std::uint64_t> seed;
  double avg_loss = 0.0;
  double total_loss = 0.0;
  std::uint64_t clamp_count = 0;
};

struct SimTrace {
  std::vector<SlotRecord> slots;
  std::vector<TransmissionRecord> transmissions;
  SimSummary summary;
  /// State at slot warmup + horizon (one past the last accounted slot).
  SimState final_state;
};

struct SimOptions {
  /// Slots simulated before accounting starts.
  std::int64_t warmup = 0;
  /// Delta(0); defaults to Delta_{1,re}.
  std::optional<AoiVector> initial_state;
  bool record_slots = true;
  bool record_transmissions = true;
};

/// Simulates `horizon` accounted slots. Slot t contributes L(Delta(t)), where
/// Delta(t) already reflects a delivery at t. The first transmission starts
/// at t = 0 and transmissions run back to back. The surface is evaluated in
/// Clamp mode; clamped lookups are counted in the summary. Losses are summed
/// per segment ending at a delivery that switches modality, so one cycle of
/// IndexThreshold from Delta_{1,re} totals C_1(tau1) + C_2(tau2) exactly.
/// Throws ConfigError (bad horizon, IndexThreshold not starting at a restart
/// state, taus above tau_max) and propagates surface errors.
SimTrace run(const LossSurface& surface, const SystemConfig& config, const PolicyKind& policy,
             std::int64_t horizon, const SimOptions& options = {});

struct PolicyResult {
  std::string policy;
  double avg_loss = 0.0;
  std::uint64_t clamp_count = 0;
  /// Number of runs averaged (the seed count for UniformRandom, else 1).
  std::size_t runs = 1;
};

struct Comparison {
  std::vector<PolicyResult> results;
  /// (baseline - index) / |baseline| * 100 for each baseline present, keyed by
  /// baseline name; 0 when both are equal.
  std::vector<std::pair<std::string, double>> reductions_pct;

  const PolicyResult* find(std::string_view policy) const;
};

/// Runs each policy over `horizon` slots from Delta_{1,re}. UniformRandom
/// entries ignore their own seed and are averaged over `seeds`.
Comparison compare_policies(const LossSurface& surface, const SystemConfig& config,
                            std::span<const PolicyKind> policies, std::int64_t horizon,
                            std::span<const std::uint64_t> seeds);

double reduction_pct(double baseline, double index_avg);

void write_slots_csv(std::ostream& out, const SimTrace& trace);
void write_transmissions_csv(std::ostream& out, const SimTrace& trace);
void to_json(nlohmann::json& j, const SimSummary& s);

}  // namespace mmaoi
