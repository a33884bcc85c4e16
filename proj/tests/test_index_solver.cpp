#include "mmaoi/index_solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mmaoi/errors.hpp"
#include "support/test_oracles.hpp"

namespace mmaoi {
namespace {

LossSurface generated(const std::string& spec, const SystemConfig& c) {
  const auto need = required_domain(c);
  return generate_surface(
      parse_surface_spec(spec, static_cast<int>(need.d1), static_cast<int>(need.d2)));
}

TEST(IndexTable, ConstantSurfaceIndexIsTheConstant) {
  const SystemConfig c{2, 5, 8};
  const auto s = generated("constant:1.5", c);
  const auto table = build_index_table(s, c);
  for (Modality m : {Modality::M1, Modality::M2}) {
    ASSERT_EQ(table.entries(m).size(), 8u);
    for (int theta = 0; theta < 8; ++theta) {
      EXPECT_EQ(table.gamma(m, theta), 1.5);
      EXPECT_EQ(table.witness(m, theta), 1);
    }
  }
}

TEST(IndexTable, AoiSumUnitTimes) {
  // C1 = 3, 7, 12, 18 so the best extension is always a single step.
  const SystemConfig c{1, 1, 3};
  const auto table = build_index_table(generated("aoi_sum", c), c);
  EXPECT_EQ(table.gamma(Modality::M1, 0), 4.0);
  EXPECT_EQ(table.gamma(Modality::M1, 1), 5.0);
  EXPECT_EQ(table.gamma(Modality::M1, 2), 6.0);
  EXPECT_EQ(table.gamma(Modality::M2, 2), 6.0);
}

TEST(IndexTable, EmptyWhenTauMaxIsZero) {
  const SystemConfig c{3, 2, 0};
  const auto table = build_index_table(generated("aoi_sum", c), c);
  EXPECT_TRUE(table.empty());
  EXPECT_EQ(tau_opt(table, Modality::M1, -100.0), 0);
  EXPECT_EQ(tau_opt(table, Modality::M2, 100.0), 0);
}

TEST(IndexTable, MatchesDirectMinimumOverWalkedCosts) {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 30; ++n) {
    const SystemConfig c{testing::uniform_int(rng, 1, 5), testing::uniform_int(rng, 1, 5),
                         static_cast<int>(testing::uniform_int(rng, 1, 12))};
    const auto need = required_domain(c);
    const auto s =
        testing::random_noise_surface(rng, static_cast<int>(need.d1), static_cast<int>(need.d2));
    const auto table = build_index_table(s, c);
    for (Modality m : {Modality::M1, Modality::M2}) {
      const double tm = static_cast<double>(c.transmission_time(m));
      for (int theta = 0; theta < c.tau_max; ++theta) {
        double best = INFINITY;
        int arg = 0;
        for (int k = 1; theta + k <= c.tau_max; ++k) {
          const double r = (testing::walked_cost(s, c, m, theta + k) -
                            testing::walked_cost(s, c, m, theta)) /
                           (k * tm);
          if (r < best) {
            best = r;
            arg = k;
          }
        }
        EXPECT_EQ(table.gamma(m, theta), best);
        EXPECT_EQ(table.witness(m, theta), arg);
      }
    }
  }
}

TEST(TauOpt, AoiSumThresholds) {
  const SystemConfig c{1, 1, 3};
  const auto table = build_index_table(generated("aoi_sum", c), c);
  EXPECT_EQ(tau_opt(table, Modality::M1, 3.5), 0);
  EXPECT_EQ(tau_opt(table, Modality::M1, 4.0), 0);
  EXPECT_EQ(tau_opt(table, Modality::M1, 4.5), 1);
  EXPECT_EQ(tau_opt(table, Modality::M1, 6.0), 2);
  EXPECT_EQ(tau_opt(table, Modality::M1, 6.5), 3);
  EXPECT_EQ(tau_opt(table, 5.0), (StationaryPolicy{1, 1}));
}

TEST(TauOpt, ConstantSurfaceSwitchesAtTheConstant) {
  const SystemConfig c{1, 2, 6};
  const auto table = build_index_table(generated("constant:2", c), c);
  EXPECT_EQ(tau_opt(table, Modality::M1, 2.0), 0);
  EXPECT_EQ(tau_opt(table, Modality::M1, 2.0000001), 6);
}

TEST(TauOpt, EqualsExhaustiveArgmin) {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 40; ++n) {
    const auto inst = testing::random_instance(rng, n);
    const auto& c = inst.config;
    const auto table = build_index_table(inst.surface, c);
    for (Modality m : {Modality::M1, Modality::M2}) {
      std::vector<double> costs;
      for (int tau = 0; tau <= c.tau_max; ++tau) {
        costs.push_back(testing::walked_cost(inst.surface, c, m, tau));
      }
      const double tm = static_cast<double>(c.transmission_time(m));
      for (int b = 0; b < 30; ++b) {
        const double beta = testing::uniform(rng, -inst.surface.bound() - 1, inst.surface.bound() + 1);
        EXPECT_EQ(tau_opt(table, m, beta), testing::exhaustive_threshold(costs, tm, beta));
      }
    }
  }
}

TEST(GValue, AoiSumExamples) {
  const SystemConfig c{1, 1, 3};
  const SchedulingProblem p(generated("aoi_sum", c), c);
  EXPECT_EQ(p.g(3.0).g, 0.0);
  EXPECT_EQ(p.g(0.0).g, 6.0);
  EXPECT_EQ(p.g(0.0).policy, (StationaryPolicy{0, 0}));
}

TEST(GValue, StrictlyDecreasingAndConcave) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 25; ++n) {
    const auto inst = testing::random_instance(rng, n);
    const SchedulingProblem p(inst.surface, inst.config);
    const double m = inst.surface.bound();
    double prev = p.g(-m).g;
    for (int i = 1; i <= 100; ++i) {
      const double beta = std::lerp(-m, m, i / 100.0);
      const double cur = p.g(beta).g;
      EXPECT_LT(cur, prev);
      prev = cur;
    }
    for (int i = 0; i < 50; ++i) {
      const double a = testing::uniform(rng, -m, m);
      const double b = testing::uniform(rng, -m, m);
      EXPECT_GE(p.g(0.5 * (a + b)).g, 0.5 * (p.g(a).g + p.g(b).g) - 1e-10 * (1 + m));
    }
  }
}

TEST(SolveThreshold, ConstantSurfaceGivesTheConstant) {
  for (double v : {0.25, 3.0, 7.5}) {
    const SystemConfig c{2, 3, 5};
    const auto s = generated("constant:" + format_double(v), c);
    const auto sol = solve_threshold(s, c);
    EXPECT_NEAR(sol.l_opt, v, 1e-9);
    EXPECT_EQ(sol.policy, (StationaryPolicy{0, 0}));
  }
}

TEST(SolveThreshold, AoiSum) {
  const SystemConfig c{1, 1, 3};
  const auto [policy, l] = optimal_policy(generated("aoi_sum", c), c);
  EXPECT_NEAR(l, 3.0, 1e-9);
  EXPECT_EQ(policy, (StationaryPolicy{0, 0}));
}

TEST(SolveThreshold, MatchesWalkedMinimumOnRandomInstances) {
  std::mt19937_64 rng(2718);
  for (int n = 0; n < 100; ++n) {
    const auto inst = testing::random_instance(rng, n);
    const auto sol = solve_threshold(inst.surface, inst.config);
    const double best = testing::walked_minimum(inst.surface, inst.config);
    EXPECT_NEAR(sol.l_opt, best, 1e-8) << format_surface_spec(inst.spec);
    EXPECT_NEAR(testing::walked_average(inst.surface, inst.config, sol.policy), best, 1e-8);
    EXPECT_LE(sol.residual, kDefaultTol);
    EXPECT_EQ(sol.saturated1, sol.policy.tau1 == inst.config.tau_max);
    EXPECT_EQ(sol.saturated2, sol.policy.tau2 == inst.config.tau_max);
  }
}

TEST(SolveThreshold, TauMaxZeroGivesRoundRobinCost) {
  const SystemConfig c{3, 2, 0};
  const auto s = generated("nonmono_nonsep", c);
  const auto sol = solve_threshold(s, c);
  EXPECT_EQ(sol.policy, (StationaryPolicy{0, 0}));
  EXPECT_NEAR(sol.l_opt, testing::walked_average(s, c, {0, 0}), 1e-9);
}

TEST(SolveThreshold, NegativeSurface) {
  const SystemConfig c{1, 2, 4};
  const auto s = generated("constant:-2", c);
  EXPECT_NEAR(solve_threshold(s, c).l_opt, -2.0, 1e-9);
}

TEST(SchedulingProblem, StrictSurfaceMustCoverRequiredDomain) {
  const SystemConfig c{2, 6, 10};
  EXPECT_THROW(SchedulingProblem(generate_surface(parse_surface_spec("aoi_sum", 68, 33)), c),
               OutOfDomain);
  EXPECT_NO_THROW(SchedulingProblem(generate_surface(parse_surface_spec("aoi_sum", 69, 33)), c));
  EXPECT_NO_THROW(SchedulingProblem(
      generate_surface(parse_surface_spec("aoi_sum", 10, 10), BoundaryPolicy::Clamp), c));
}

TEST(SchedulingProblem, BadConfigRejected) {
  const auto s = generate_surface(parse_surface_spec("aoi_sum", 10, 10));
  EXPECT_THROW(SchedulingProblem(s, SystemConfig{0, 1, 1}), ConfigError);
  EXPECT_THROW(SchedulingProblem(s, SystemConfig{1, 1, -3}), ConfigError);
}

TEST(SolveThreshold, BadToleranceRejected) {
  const SystemConfig c{1, 1, 3};
  const SchedulingProblem p(generated("aoi_sum", c), c);
  EXPECT_THROW(p.solve(0.0), ConfigError);
  EXPECT_THROW(p.solve(-1.0), ConfigError);
  EXPECT_THROW(p.solve(NAN), ConfigError);
}

TEST(MonotoneReduction, UnitTimesIndexIsNextLoss) {
  std::mt19937_64 rng(77);
  for (int n = 0; n < 20; ++n) {
    const SystemConfig c{1, 1, static_cast<int>(testing::uniform_int(rng, 1, 25))};
    const auto need = required_domain(c);
    const auto s = testing::random_dyadic_monotone(rng, static_cast<int>(need.d1),
                                                   static_cast<int>(need.d2));
    const auto table = build_index_table(s, c);
    for (int theta = 0; theta < c.tau_max; ++theta) {
      EXPECT_EQ(table.gamma(Modality::M1, theta), s.eval(1, theta + 3));
      EXPECT_EQ(table.witness(Modality::M1, theta), 1);
    }
  }
}

}  // namespace
}  // namespace mmaoi
