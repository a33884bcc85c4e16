#include "mmaoi/cycle_cost.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mmaoi/errors.hpp"
#include "support/test_oracles.hpp"

namespace mmaoi {
namespace {

LossSurface aoi_sum(int d) { return generate_surface(parse_surface_spec("aoi_sum", d, d)); }

TEST(CycleCost, AoiSumUnitTimes) {
  const auto s = aoi_sum(10);
  const SystemConfig c{1, 1, 3};
  EXPECT_EQ(cycle_cost(s, c, Modality::M1, 0), 3.0);
  EXPECT_EQ(cycle_cost(s, c, Modality::M1, 1), 7.0);
  EXPECT_EQ(cycle_cost(s, c, Modality::M1, 2), 12.0);
  EXPECT_EQ(cycle_cost(s, c, Modality::M2, 0), 3.0);
}

TEST(CycleCost, ConstantSurfaceCountsSummands) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 50; ++n) {
    const SystemConfig c{testing::uniform_int(rng, 1, 7), testing::uniform_int(rng, 1, 7),
                         static_cast<int>(testing::uniform_int(rng, 0, 12))};
    const auto need = required_domain(c);
    const auto s = generate_surface(
        parse_surface_spec("constant:2", static_cast<int>(need.d1), static_cast<int>(need.d2)));
    for (Modality m : {Modality::M1, Modality::M2}) {
      for (int tau = 0; tau <= c.tau_max; ++tau) {
        EXPECT_EQ(cycle_cost(s, c, m, tau), 2.0 * static_cast<double>(cycle_duration(c, m, tau)));
      }
    }
  }
}

TEST(CycleCost, MatchesSlotWalkOnRandomSurfaces) {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 40; ++n) {
    const SystemConfig c{testing::uniform_int(rng, 1, 6), testing::uniform_int(rng, 1, 6),
                         static_cast<int>(testing::uniform_int(rng, 0, 10))};
    const auto need = required_domain(c);
    const auto s =
        testing::random_noise_surface(rng, static_cast<int>(need.d1), static_cast<int>(need.d2));
    for (Modality m : {Modality::M1, Modality::M2}) {
      for (int tau = 0; tau <= c.tau_max; ++tau) {
        EXPECT_EQ(cycle_cost(s, c, m, tau), testing::walked_cost(s, c, m, tau));
      }
    }
  }
}

TEST(CycleCost, SymmetricSurfaceEqualTimesGivesEqualCosts) {
  std::mt19937_64 rng(99);
  for (int n = 0; n < 20; ++n) {
    const auto t = testing::uniform_int(rng, 1, 5);
    const SystemConfig c{t, t, static_cast<int>(testing::uniform_int(rng, 0, 10))};
    const auto need = required_domain(c);
    const int d = static_cast<int>(std::max(need.d1, need.d2));
    auto noise = testing::random_noise_surface(rng, d, d);
    std::vector<double> v(noise.values().begin(), noise.values().end());
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < a; ++b) v[b * d + a] = v[a * d + b];
    }
    const LossSurface sym(d, d, std::move(v));
    for (int tau = 0; tau <= c.tau_max; ++tau) {
      EXPECT_EQ(cycle_cost(sym, c, Modality::M1, tau), cycle_cost(sym, c, Modality::M2, tau));
    }
  }
}

TEST(CycleCost, RestartPropertyOfTheWalk) {
  const SystemConfig c{3, 5, 4};
  for (Modality m : {Modality::M1, Modality::M2}) {
    for (int tau = 0; tau <= c.tau_max; ++tau) {
      AoiVector end;
      const auto slots = testing::walk_transition(c, m, tau, &end);
      EXPECT_EQ(end, restart_state(c, other(m)));
      EXPECT_EQ(static_cast<std::int64_t>(slots.size()), cycle_duration(c, m, tau));
    }
  }
}

TEST(CycleCost, StrictSurfaceTooSmallThrows) {
  const SystemConfig c{1, 1, 3};
  EXPECT_THROW(cycle_cost(aoi_sum(4), c, Modality::M1, 3), OutOfDomain);
  EXPECT_NO_THROW(cycle_cost(aoi_sum(5), c, Modality::M1, 3));
}

TEST(CycleCost, TauOutsideRangeThrows) {
  EXPECT_THROW(cycle_cost(aoi_sum(10), {1, 1, 3}, Modality::M1, 4), ConfigError);
  EXPECT_THROW(cycle_cost(aoi_sum(10), {1, 1, 3}, Modality::M1, -1), ConfigError);
}

TEST(CycleDuration, Examples) {
  EXPECT_EQ(cycle_duration({1, 1, 5}, Modality::M1, 0), 1);
  EXPECT_EQ(cycle_duration({2, 6, 5}, Modality::M1, 3), 12);
  EXPECT_EQ(cycle_duration({2, 6, 5}, Modality::M2, 3), 20);
}

TEST(StationaryAverageCost, Examples) {
  const auto s = aoi_sum(10);
  const SystemConfig c{1, 1, 3};
  EXPECT_EQ(stationary_average_cost(s, c, {0, 0}), 3.0);
  EXPECT_DOUBLE_EQ(stationary_average_cost(s, c, {1, 0}), 10.0 / 3.0);
  const CycleCostTable table(s, c);
  EXPECT_EQ(stationary_average_cost(table, {1, 0}), stationary_average_cost(s, c, {1, 0}));
  EXPECT_THROW(stationary_average_cost(table, {4, 0}), ConfigError);
}

TEST(StationaryAverageCost, ConstantSurfaceEveryPolicy) {
  const SystemConfig c{2, 3, 4};
  const auto need = required_domain(c);
  const auto s = generate_surface(
      parse_surface_spec("constant:1.25", static_cast<int>(need.d1), static_cast<int>(need.d2)));
  const CycleCostTable table(s, c);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) EXPECT_EQ(stationary_average_cost(table, {a, b}), 1.25);
  }
}

TEST(SystemConfig, Validation) {
  EXPECT_THROW((SystemConfig{0, 1, 1}.validate()), ConfigError);
  EXPECT_THROW((SystemConfig{1, 0, 1}.validate()), ConfigError);
  EXPECT_THROW((SystemConfig{1, 1, -1}.validate()), ConfigError);
  EXPECT_NO_THROW((SystemConfig{1, 1, 0}.validate()));
}

TEST(RestartState, Coordinates) {
  const SystemConfig c{2, 6, 10};
  EXPECT_EQ(restart_state(c, Modality::M1), (AoiVector{2, 8}));
  EXPECT_EQ(restart_state(c, Modality::M2), (AoiVector{8, 6}));
}

}  // namespace
}  // namespace mmaoi
