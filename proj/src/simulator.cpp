#include "mmaoi/simulator.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include <nlohmann/json.hpp>

#include "mmaoi/cycle_cost.hpp"
#include "mmaoi/errors.hpp"

namespace mmaoi {

SimState step_aoi(const SimState& state, const SystemConfig& config) {
  SimState next = state;
  next.t = state.t + 1;
  ++next.aoi.d1;
  ++next.aoi.d2;
  if (state.in_flight && state.in_flight->delivery == next.t) {
    const Modality m = state.in_flight->modality;
    (m == Modality::M1 ? next.aoi.d1 : next.aoi.d2) = config.transmission_time(m);
    next.in_flight.reset();
  }
  return next;
}

std::string policy_name(const PolicyKind& policy) {
  struct Visitor {
    std::string operator()(const IndexThreshold&) const { return "index"; }
    std::string operator()(const RoundRobin&) const { return "rr"; }
    std::string operator()(const UniformRandom&) const { return "rand"; }
  };
  return std::visit(Visitor{}, policy);
}

namespace {

// Per-run decision state for each policy kind.
class Scheduler {
 public:
  Scheduler(const PolicyKind& kind, const SystemConfig& config, const AoiVector& start)
      : kind_(kind) {
    if (const auto* idx = std::get_if<IndexThreshold>(&kind)) {
      validate_policy(config, idx->taus);
      if (start == restart_state(config, Modality::M1)) {
        phase_ = Modality::M1;
      } else if (start == restart_state(config, Modality::M2)) {
        phase_ = Modality::M2;
      } else {
        throw ConfigError("index policy must start at a restart state");
      }
      remaining_ = idx->taus.tau(phase_);
    } else if (std::holds_alternative<RoundRobin>(kind)) {
      last_ = start.d2 > start.d1 ? Modality::M1 : Modality::M2;
    } else {
      rng_.seed(std::get<UniformRandom>(kind).seed);
    }
  }

  Modality next() {
    if (const auto* idx = std::get_if<IndexThreshold>(&kind_)) {
      if (remaining_ > 0) {
        --remaining_;
        return phase_;
      }
      phase_ = other(phase_);
      remaining_ = idx->taus.tau(phase_);
      return phase_;
    }
    if (std::holds_alternative<RoundRobin>(kind_)) {
      last_ = other(last_);
      return last_;
    }
    return (rng_() >> 63) != 0 ? Modality::M2 : Modality::M1;
  }

 private:
  PolicyKind kind_;
  Modality phase_ = Modality::M1;
  int remaining_ = 0;
  Modality last_ = Modality::M2;
  std::mt19937_64 rng_;
};

}  // namespace

SimTrace run(const LossSurface& surface_in, const SystemConfig& config, const PolicyKind& policy,
             std::int64_t horizon, const SimOptions& options) {
  config.validate();
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  if (options.warmup < 0) throw ConfigError("warmup must be >= 0");
  const AoiVector start = options.initial_state.value_or(restart_state(config, Modality::M1));
  if (start.d1 < 1 || start.d2 < 1) throw ConfigError("initial AoI must be positive");

  const LossSurface surface = surface_in.with_policy(BoundaryPolicy::Clamp);
  Scheduler scheduler(policy, config, start);

  SimTrace trace;
  trace.summary.policy = policy_name(policy);
  trace.summary.horizon = horizon;
  if (const auto* r = std::get_if<UniformRandom>(&policy)) trace.summary.seed = r->seed;
  if (options.record_slots) trace.slots.reserve(static_cast<std::size_t>(horizon));

  SimState state{0, start, std::nullopt};
  std::int64_t n = 0;
  // Loss is summed per segment between switch deliveries and then added to the
  // total, so a cycle from a restart state totals exactly C_1 + C_2.
  double total = 0.0;
  double segment = 0.0;
  Modality last_delivered = start.d1 <= start.d2 ? Modality::M1 : Modality::M2;
  std::uint64_t clamps = 0;
  const std::int64_t end = options.warmup + horizon;
  while (state.t < end) {
    if (!state.in_flight) {
      const Modality a = scheduler.next();
      state.in_flight = InFlight{a, state.t, state.t + config.transmission_time(a)};
      if (options.record_transmissions) {
        trace.transmissions.push_back({n, a, state.in_flight->start, state.in_flight->delivery});
      }
      ++n;
    }
    if (state.t >= options.warmup) {
      const double loss = surface.eval(state.aoi, &clamps);
      segment += loss;
      if (options.record_slots) trace.slots.push_back({state.t, state.aoi.d1, state.aoi.d2, loss});
    }
    const Modality sending = state.in_flight->modality;
    state = step_aoi(state, config);
    if (!state.in_flight) {
      if (sending != last_delivered) {
        total += segment;
        segment = 0.0;
      }
      last_delivered = sending;
    }
  }
  total += segment;
  trace.summary.total_loss = total;
  trace.summary.avg_loss = total / static_cast<double>(horizon);
  trace.summary.clamp_count = clamps;
  trace.final_state = state;
  return trace;
}

const PolicyResult* Comparison::find(std::string_view policy) const {
  for (const auto& r : results) {
    if (r.policy == policy) return &r;
  }
  return nullptr;
}

double reduction_pct(double baseline, double index_avg) {
  if (baseline == index_avg) return 0.0;
  if (baseline == 0.0) return index_avg < 0.0 ? 100.0 : -100.0;
  return (baseline - index_avg) / std::abs(baseline) * 100.0;
}

Comparison compare_policies(const LossSurface& surface, const SystemConfig& config,
                            std::span<const PolicyKind> policies, std::int64_t horizon,
                            std::span<const std::uint64_t> seeds) {
  SimOptions options;
  options.record_slots = false;
  options.record_transmissions = false;

  Comparison cmp;
  for (const auto& policy : policies) {
    PolicyResult result;
    result.policy = policy_name(policy);
    if (std::holds_alternative<UniformRandom>(policy)) {
      if (seeds.empty()) throw ConfigError("uniform random policy needs at least one seed");
      double sum = 0.0;
      for (auto seed : seeds) {
        const auto trace = run(surface, config, UniformRandom{seed}, horizon, options);
        sum += trace.summary.avg_loss;
        result.clamp_count += trace.summary.clamp_count;
      }
      result.runs = seeds.size();
      result.avg_loss = sum / static_cast<double>(seeds.size());
    } else {
      const auto trace = run(surface, config, policy, horizon, options);
      result.avg_loss = trace.summary.avg_loss;
      result.clamp_count = trace.summary.clamp_count;
    }
    cmp.results.push_back(std::move(result));
  }
  if (const auto* index = cmp.find("index")) {
    for (const auto& r : cmp.results) {
      if (r.policy != "index") {
        cmp.reductions_pct.emplace_back(r.policy, reduction_pct(r.avg_loss, index->avg_loss));
      }
    }
  }
  return cmp;
}

void write_slots_csv(std::ostream& out, const SimTrace& trace) {
  out << "t,delta1,delta2,loss\n";
  for (const auto& s : trace.slots) {
    out << s.t << ',' << s.d1 << ',' << s.d2 << ',' << format_double(s.loss) << '\n';
  }
}

void write_transmissions_csv(std::ostream& out, const SimTrace& trace) {
  out << "n,modality,start,delivery\n";
  for (const auto& r : trace.transmissions) {
    out << r.n << ',' << static_cast<int>(r.modality) << ',' << r.start << ',' << r.delivery
        << '\n';
  }
}

void to_json(nlohmann::json& j, const SimSummary& s) {
  j = nlohmann::json{{"policy", s.policy},
                     {"horizon", s.horizon},
                     {"avg_loss", s.avg_loss},
                     {"total_loss", s.total_loss},
                     {"clamp_count", s.clamp_count}};
  if (s.seed) j["seed"] = *s.seed;
}

}  // namespace mmaoi
