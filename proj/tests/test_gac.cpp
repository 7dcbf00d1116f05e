#include "rigid/error.hpp"
#include "rigid/families.hpp"
#include "rigid/gac.hpp"
#include "rigid/graph.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace rigid {
namespace {

OptimizerConfig small_budget(std::uint64_t seed = 0) {
  OptimizerConfig c;
  c.restarts = 4;
  c.iterations = 60;
  c.seed = seed;
  return c;
}

TEST(AlgebraicConnectivity, Examples) {
  for (int n = 2; n <= 10; ++n) EXPECT_NEAR(algebraic_connectivity(complete_graph(n)), n, 1e-10);
  for (int d = 2; d <= 4; ++d)
    for (int n = d + 2; n <= 10; ++n) EXPECT_NEAR(algebraic_connectivity(star_graph(n, d)), d, 1e-10);
  EXPECT_NEAR(algebraic_connectivity(turan_graph(2, 3)), 4, 1e-10);
  EXPECT_NEAR(algebraic_connectivity(path_graph(5, 1)), 2 * (1 - std::cos(std::numbers::pi / 5)), 1e-12);
  EXPECT_NEAR(algebraic_connectivity(build_graph(3, {{1, 2}})), 0.0, 1e-12);
}

TEST(EstimateGac, CompleteTwoIsExactlyTwo) {
  for (int d = 1; d <= 5; ++d) {
    auto e = estimate_gac(complete_graph(2), d, small_budget());
    EXPECT_NEAR(e.value, 2.0, 1e-12);
    EXPECT_NEAR(e.upper_bound, 2.0, 1e-12);
  }
}

TEST(EstimateGac, CompleteFourInThePlane) {
  auto e = estimate_gac(complete_graph(4), 2);
  EXPECT_GE(e.value, 1.9);
  EXPECT_LE(e.value, 2.0 + 1e-6);
}

TEST(EstimateGac, StarInThePlane) {
  auto e = estimate_gac(star_graph(6, 2), 2);
  EXPECT_GE(e.value, 0.95);
  EXPECT_LE(e.value, 1.0 + 1e-6);
}

TEST(EstimateGac, FamilyOverloadTightensUpperBound) {
  auto e = estimate_gac(FamilySpec::complete(5), 2, small_budget());
  EXPECT_NEAR(e.upper_bound, 2.5, 1e-12);
  auto s = estimate_gac(FamilySpec::star(6, 2), 2, small_budget());
  EXPECT_NEAR(s.upper_bound, 1.0, 1e-12);
}

TEST(EstimateGac, ValueIsReproducibleLowerBound) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 1 + trial % 4;
    Graph g = testing::random_connected_graph(3 + trial % 7, 0.4, rng);
    auto e = estimate_gac(g, d, small_budget(trial));
    EXPECT_LE(e.value, e.upper_bound + 1e-6);
    EXPECT_TRUE(e.best_realization.is_injective());
    EXPECT_EQ(e.best_realization.ambient_dim(), d);
    const double again = realization_objective(g, e.best_realization, Exec::serial);
    EXPECT_NEAR(again, e.value, 1e-8);
    EXPECT_GE(e.best_realization.min_pairwise_distance(), 1e-6 * 0.999);
  }
}

TEST(EstimateGac, TraceIsMonotone) {
  auto e = estimate_gac(cycle_graph(9, 2), 2, small_budget(3));
  ASSERT_EQ(static_cast<int>(e.trace.size()), e.iterations);
  for (std::size_t k = 1; k < e.trace.size(); ++k) EXPECT_GE(e.trace[k], e.trace[k - 1]);
  EXPECT_EQ(e.trace.back(), e.restart_values[e.best_restart]);
  ASSERT_EQ(static_cast<int>(e.restart_values.size()), e.restarts);
  for (double v : e.restart_values) EXPECT_LE(v, e.restart_values[e.best_restart]);
}

TEST(EstimateGac, SeedDeterminismAcrossExecutionModes) {
  Graph g = turan_graph(2, 3);
  auto cfg = small_budget(42);
  cfg.exec = Exec::serial;
  auto a = estimate_gac(g, 3, cfg);
  auto b = estimate_gac(g, 3, cfg);
  cfg.exec = Exec::parallel;
  auto c = estimate_gac(g, 3, cfg);
  for (const auto* other : {&b, &c}) {
    EXPECT_EQ(a.value, other->value);
    EXPECT_EQ(a.best_restart, other->best_restart);
    EXPECT_EQ(a.trace, other->trace);
    EXPECT_EQ(a.restart_values, other->restart_values);
    EXPECT_EQ(a.evaluations, other->evaluations);
    EXPECT_EQ(a.rejected_noninjective, other->rejected_noninjective);
    EXPECT_EQ(a.best_realization.coordinates(), other->best_realization.coordinates());
  }
  auto other_seed = estimate_gac(g, 3, small_budget(43));
  EXPECT_NE(a.best_realization.coordinates(), other_seed.best_realization.coordinates());
}

TEST(EstimateGac, OneDimensionMatchesAlgebraicConnectivity) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testing::random_connected_graph(2 + trial, 0.4, rng);
    auto e = estimate_gac(g, 1, small_budget(trial));
    EXPECT_NEAR(e.value, testing::jacobi_eigenvalues(laplacian(g).matrix())[1], 1e-8);
  }
}

TEST(EstimateGac, RejectsBadConfig) {
  OptimizerConfig c;
  c.restarts = 0;
  EXPECT_THROW(estimate_gac(complete_graph(3), 2, c), InvalidInput);
  c = {};
  c.iterations = -1;
  EXPECT_THROW(estimate_gac(complete_graph(3), 2, c), InvalidInput);
  c = {};
  c.step_decay = 1.5;
  EXPECT_THROW(estimate_gac(complete_graph(3), 2, c), InvalidInput);
  EXPECT_THROW(estimate_gac(complete_graph(3), 0), InvalidInput);
  EXPECT_THROW(estimate_gac(build_graph(1, {}), 2), InvalidInput);
}

TEST(RigidityRatio, Examples) {
  for (int d = 2; d <= 5; ++d) EXPECT_NEAR(rigidity_ratio(complete_graph(2), d, small_budget()), 1.0, 1e-9);
  for (int n = 3; n <= 6; ++n) {
    const double r = rigidity_ratio(complete_graph(n), 2);
    EXPECT_GE(r, 0.95 * 0.5);
    EXPECT_LE(r, 0.5 + 1e-6);
  }
  EXPECT_LE(rigidity_ratio(path_graph(5, 1), 2, small_budget()), 1e-8);
  EXPECT_THROW(rigidity_ratio(build_graph(3, {{1, 2}}), 2), PreconditionFailure);
}

TEST(RigidityRatio, NeverExceedsOne) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = testing::random_connected_graph(3 + trial % 8, 0.5, rng);
    for (int d = 2; d <= 4; ++d) EXPECT_LE(rigidity_ratio(g, d, small_budget(trial)), 1 + 1e-6);
  }
}

TEST(KnownGac, Examples) {
  auto k2 = known_gac(FamilySpec::complete(2), 5);
  ASSERT_TRUE(k2);
  EXPECT_TRUE(k2->exact());
  EXPECT_EQ(*k2->lower, 2.0);

  auto k8 = known_gac(FamilySpec::complete(8), 3);
  ASSERT_TRUE(k8);
  EXPECT_FALSE(k8->exact());
  EXPECT_DOUBLE_EQ(*k8->lower, 1.5);
  EXPECT_DOUBLE_EQ(*k8->upper, 3.0);

  auto t = known_gac(FamilySpec::turan(2, 4), 2);
  ASSERT_TRUE(t);
  EXPECT_DOUBLE_EQ(*t->lower, 2.0);

  auto t3 = known_gac(FamilySpec::turan(3, 3), 2);
  ASSERT_TRUE(t3);
  EXPECT_DOUBLE_EQ(*t3->lower, 1.5);

  for (int n = 3; n <= 8; ++n) {
    auto e = known_gac(FamilySpec::complete(n), 2);
    ASSERT_TRUE(e);
    EXPECT_TRUE(e->exact());
    EXPECT_DOUBLE_EQ(*e->lower, n / 2.0);
  }
  for (int d = 3; d <= 5; ++d) {
    auto e = known_gac(FamilySpec::complete(d + 1), d);
    ASSERT_TRUE(e);
    EXPECT_EQ(*e->lower, 1.0);
    EXPECT_TRUE(e->exact());
  }
  auto star = known_gac(FamilySpec::star(7, 3), 3);
  ASSERT_TRUE(star);
  EXPECT_TRUE(star->exact());
  EXPECT_EQ(*star->lower, 1.0);
  auto a1 = known_gac(FamilySpec::star(7, 3), 1);
  ASSERT_TRUE(a1);
  EXPECT_EQ(*a1->lower, 3.0);

  EXPECT_FALSE(known_gac(FamilySpec::path(6, 2), 2));
}

TEST(KnownGac, EstimatesRespectUpperBrackets) {
  for (int d = 3; d <= 4; ++d) {
    for (int n = d + 2; n <= d + 4; ++n) {
      auto k = known_gac(FamilySpec::complete(n), d);
      ASSERT_TRUE(k && k->lower && k->upper);
      EXPECT_LE(*k->lower, *k->upper);
      auto e = estimate_gac(FamilySpec::complete(n), d, small_budget());
      EXPECT_LE(e.value, *k->upper + 1e-6) << n << "," << d;
      EXPECT_LE(e.upper_bound, *k->upper);
    }
  }
}

}  // namespace
}  // namespace rigid
