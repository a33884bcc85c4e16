#pragma once

// Test-only ground truth. Nothing here calls into cycle_cost, the index
// solver or the simulator.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mmaoi/config.hpp"
#include "mmaoi/loss_surface.hpp"

namespace mmaoi::testing {

/// AoI vectors visited, slot by slot, from Delta_{m,re} over `tau`
/// transmissions of m and one of the other modality, obtained by applying
/// the AoI recursion directly. `end` receives the state after the last slot.
inline std::vector<AoiVector> walk_transition(const SystemConfig& c, Modality m, int tau,
                                              AoiVector* end = nullptr) {
  AoiVector aoi = m == Modality::M1 ? AoiVector{c.t1, c.t1 + c.t2} : AoiVector{c.t1 + c.t2, c.t2};
  std::vector<Modality> sends(static_cast<std::size_t>(tau), m);
  sends.push_back(other(m));
  std::vector<AoiVector> visited;
  for (Modality x : sends) {
    const std::int64_t tx = x == Modality::M1 ? c.t1 : c.t2;
    for (std::int64_t s = 0; s < tx; ++s) {
      visited.push_back(aoi);
      ++aoi.d1;
      ++aoi.d2;
    }
    (x == Modality::M1 ? aoi.d1 : aoi.d2) = tx;
  }
  if (end != nullptr) *end = aoi;
  return visited;
}

/// Transition cost by summing L over the walked slots in time order.
inline double walked_cost(const LossSurface& s, const SystemConfig& c, Modality m, int tau) {
  double total = 0.0;
  for (const auto& v : walk_transition(c, m, tau)) total += s.eval(v.d1, v.d2);
  return total;
}

/// Largest coordinates touched by any transition with tau <= tau_max.
inline Domain enumerate_domain(const SystemConfig& c) {
  Domain d{0, 0};
  for (Modality m : {Modality::M1, Modality::M2}) {
    for (int tau = 0; tau <= c.tau_max; ++tau) {
      for (const auto& v : walk_transition(c, m, tau)) {
        d.d1 = std::max(d.d1, v.d1);
        d.d2 = std::max(d.d2, v.d2);
      }
    }
  }
  return d;
}

/// Average cost of a stationary policy from walked costs.
inline double walked_average(const LossSurface& s, const SystemConfig& c, StationaryPolicy p) {
  const double total = walked_cost(s, c, Modality::M1, p.tau1) + walked_cost(s, c, Modality::M2, p.tau2);
  const double len = static_cast<double>((p.tau1 + 1) * c.t1 + (p.tau2 + 1) * c.t2);
  return total / len;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random generator spec covering all five generators, sized to `domain`.
inline SurfaceSpec random_spec(std::mt19937_64& rng, Generator g, const Domain& domain) {
  SurfaceSpec spec;
  spec.generator = g;
  spec.d1_max = static_cast<int>(domain.d1);
  spec.d2_max = static_cast<int>(domain.d2);
  switch (g) {
    case Generator::Constant:
      spec.params = {uniform(rng, 0.5, 5.0)};
      break;
    case Generator::AoiSum:
      break;
    case Generator::AoiWeighted:
      spec.params = {uniform(rng, 0.1, 2.0), uniform(rng, 0.1, 2.0)};
      break;
    case Generator::MonotonePower:
      spec.params = {uniform(rng, 0.3, 1.5), uniform(rng, 0.3, 1.5)};
      break;
    case Generator::NonmonoNonsep:
      spec.params = {uniform(rng, 0.5, 1.5), uniform(rng, 0.2, 1.0), uniform(rng, 0.02, 0.3),
                     uniform(rng, 0.01, 0.2), uniform(rng, -0.5, 1.0), uniform(rng, 0.05, 0.6),
                     uniform(rng, 3.0, 15.0)};
      break;
  }
  return spec;
}

inline constexpr Generator kAllGenerators[] = {Generator::Constant, Generator::AoiSum,
                                               Generator::AoiWeighted, Generator::MonotonePower,
                                               Generator::NonmonoNonsep};

/// Non-decreasing surface whose values are multiples of 1/64 below 2^10,
/// so every partial sum of cycle costs is exact in double precision.
inline LossSurface random_dyadic_monotone(std::mt19937_64& rng, int d1, int d2) {
  std::vector<double> v(static_cast<std::size_t>(d1) * d2);
  for (int a = 0; a < d1; ++a) {
    for (int b = 0; b < d2; ++b) {
      const double up = a > 0 ? v[(a - 1) * d2 + b] : 0.0;
      const double left = b > 0 ? v[a * d2 + b - 1] : 0.0;
      const double step = static_cast<double>(uniform_int(rng, 0, 48)) / 64.0;
      v[a * d2 + b] = std::max(up, left) + step;
    }
  }
  return LossSurface(d1, d2, std::move(v));
}

/// Random non-monotone surface with arbitrary doubles in [lo, hi].
inline LossSurface random_noise_surface(std::mt19937_64& rng, int d1, int d2, double lo = -1.0,
                                        double hi = 3.0) {
  std::vector<double> v(static_cast<std::size_t>(d1) * d2);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return LossSurface(d1, d2, std::move(v));
}

struct RandomInstance {
  SystemConfig config;
  SurfaceSpec spec;
  LossSurface surface;
};

/// T1, T2 in 1..6, tau_max in 2..20, generator cycling through all five.
inline RandomInstance random_instance(std::mt19937_64& rng, int n) {
  SystemConfig c{uniform_int(rng, 1, 6), uniform_int(rng, 1, 6),
                 static_cast<int>(uniform_int(rng, 2, 20))};
  const auto spec = random_spec(rng, kAllGenerators[n % 5], required_domain(c));
  return {c, spec, generate_surface(spec)};
}

/// Minimum average cost over all stationary policies, from walked costs.
inline double walked_minimum(const LossSurface& s, const SystemConfig& c) {
  std::vector<double> c1, c2;
  for (int tau = 0; tau <= c.tau_max; ++tau) {
    c1.push_back(walked_cost(s, c, Modality::M1, tau));
    c2.push_back(walked_cost(s, c, Modality::M2, tau));
  }
  double best = INFINITY;
  for (int a = 0; a <= c.tau_max; ++a) {
    for (int b = 0; b <= c.tau_max; ++b) {
      best = std::min(best, (c1[a] + c2[b]) / static_cast<double>((a + 1) * c.t1 + (b + 1) * c.t2));
    }
  }
  return best;
}

/// Smallest tau minimizing C(tau) - tau * T * beta, evaluated from walked costs.
inline int exhaustive_threshold(const std::vector<double>& costs, double tm, double beta) {
  int best = 0;
  double best_v = costs[0];
  for (int tau = 1; tau < static_cast<int>(costs.size()); ++tau) {
    const double v = costs[tau] - tau * tm * beta;
    if (v < best_v) {
      best_v = v;
      best = tau;
    }
  }
  return best;
}

}  // namespace mmaoi::testing
