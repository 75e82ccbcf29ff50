#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "lqnash/oracle.hpp"
#include "lqnash/solver.hpp"
#include "support.hpp"

namespace lqnash {
namespace {

constexpr double kSym = 0.3554157267758450154586612709157163059285;
constexpr double kSymCost = 1.229095387936242899991283145722481968128;

NormalizedGame family(const BigRational& a, const BigRational& r2) {
  return canonical_game(a, BigRational(1, 2), 1, 1, r2);
}

TEST(HEval, SignsAtEndpoints) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const NormalizedGame g = normalize(testing::random_game(rng));
    EXPECT_GT(h_eval(g, 0), 0);
    EXPECT_LT(h_eval(g, g.numeric.a), 0);
  }
  EXPECT_NEAR(h_eval(canonical_game(1, 1, 1, 1, 1), kSym), 0, 1e-14);
}

TEST(BrIteration, Examples) {
  const NormalizedGame ones = canonical_game(1, 1, 1, 1, 1);
  const auto r = br_iteration(ones, 0, 10000, 1e-14);
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(r.k1, kSym, 1e-12);
  EXPECT_NEAR(r.k2, kSym, 1e-12);
  const auto res = residuals(ones, r.k1, r.k2);
  EXPECT_LE(std::max(std::abs(res.first), std::abs(res.second)), 1e-12);

  const NormalizedGame g = family(3, 2);
  const auto one = br_iteration(g, 3, 1, 1e-14);
  EXPECT_EQ(one.iterations, 1);
  // br2(a) = 0, so the first step lands on br1(0).
  EXPECT_DOUBLE_EQ(one.k1, best_response(g, Player::One, 0).k_best);
}

TEST(BrIteration, FixedPointsAreEquilibria) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const NormalizedGame g = normalize(testing::random_game(rng));
    const SolveReport rep = solve_normalized(g);
    for (int s = 0; s <= 4; ++s) {
      const auto r = br_iteration(g, g.numeric.a * s / 4, 20000, 1e-13);
      if (!r.converged) continue;
      bool matched = false;
      for (const auto& e : rep.equilibria)
        matched |= std::abs(e.k1_normalized - r.k1) < 1e-6 && std::abs(e.k2_normalized - r.k2) < 1e-6;
      EXPECT_TRUE(matched);
    }
  }
}

TEST(GridScan, Examples) {
  const auto ones = grid_scan(canonical_game(1, 1, 1, 1, 1), 256);
  ASSERT_EQ(ones.size(), 1u);
  EXPECT_NEAR(ones[0].first, kSym, 1e-9);
  EXPECT_NEAR(ones[0].second, kSym, 1e-9);

  const NormalizedGame g = family(BigRational(39, 10), 1);
  const auto found = grid_scan(g, 512);
  const SolveReport rep = solve_normalized(g);
  ASSERT_EQ(found.size(), 3u);
  ASSERT_EQ(rep.equilibria.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(found[i].first, rep.equilibria[i].k1_normalized, 1e-6);
    EXPECT_NEAR(found[i].second, rep.equilibria[i].k2_normalized, 1e-6);
  }
}

TEST(GridScan, ParallelMatchesSerial) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const NormalizedGame g = normalize(testing::random_game(rng));
    const auto serial = grid_scan_serial(g, 128);
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      EXPECT_EQ(grid_scan(g, 128), serial);
    }
  }
}

TEST(GridScan, FaultHookMovesZeros) {
  GridScanOptions fault;
  fault.fault_negate_state_cost = true;
  const auto broken = grid_scan(canonical_game(1, 1, 1, 1, 1), 256, fault);
  for (const auto& [k1, k2] : broken) EXPECT_FALSE(std::abs(k1 - kSym) < 1e-6 && std::abs(k2 - kSym) < 1e-6);
}

TEST(ResultantElimination, Examples) {
  const NormalizedGame ones = canonical_game(1, 1, 1, 1, 1);
  const UniPoly res = resultant_elimination(ones);
  EXPECT_LE(res.degree(), 9);
  EXPECT_NEAR(res.eval(kSym) / res.leading().get_d(), 0, 1e-10);
  EXPECT_TRUE(contains_roots_in_range(res, build_g(ones), ones.a));
}

TEST(ResultantElimination, ContainsEveryRootOfG) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const NormalizedGame g = normalize(testing::random_rational_game(rng));
    const UniPoly res = resultant_elimination(g);
    EXPECT_LE(res.degree(), 9);
    EXPECT_TRUE(contains_roots_in_range(res, build_g(g), g.a));
  }
  // A polynomial without those roots is rejected.
  const NormalizedGame ones = canonical_game(1, 1, 1, 1, 1);
  EXPECT_FALSE(contains_roots_in_range(UniPoly{-1, 0, 1}, build_g(ones), ones.a));
}

TEST(SimulateCost, Examples) {
  const NormalizedGame ones = canonical_game(1, 1, 1, 1, 1);
  const auto traj = simulate_cost(ones, kSym, kSym, 200, 1.0);
  ASSERT_EQ(traj.size(), 200u);
  EXPECT_NEAR(traj.back().partial_cost_1, kSymCost, 1e-10);
  EXPECT_NEAR(traj.back().partial_cost_2, kSymCost, 1e-10);
  for (std::size_t t = 1; t < traj.size(); ++t) {
    EXPECT_DOUBLE_EQ(traj[t].x, (1 - 2 * kSym) * traj[t - 1].x);
    EXPECT_GE(traj[t].partial_cost_1, traj[t - 1].partial_cost_1);
  }
  EXPECT_DOUBLE_EQ(traj[0].u1, -kSym);

  const NormalizedGame g = canonical_game(2, 1, 3, 1, 1);
  const auto dead = simulate_cost(g, 1.5, 0.5, 10, 1.0);
  for (const auto& s : dead) EXPECT_EQ(s.partial_cost_1, dead[0].partial_cost_1);

  const auto diverge = simulate_cost(ones, 0.0, -0.5, 50, 1.0);
  for (std::size_t t = 1; t < diverge.size(); ++t)
    EXPECT_GT(diverge[t].partial_cost_1 - diverge[t - 1].partial_cost_1,
              diverge[t - 1].partial_cost_1 - (t > 1 ? diverge[t - 2].partial_cost_1 : 0.0));
}

TEST(SimulateCost, GeometricConvergence) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int done = 0;
  while (done < 100) {
    const NormalizedGame g = normalize(testing::random_rational_game(rng));
    const double a = g.numeric.a;
    const double k1 = a * u(rng), k2 = a * u(rng);
    const CostReport c = cost(g, k1, k2);
    if (!c.finite) continue;
    const int T = 60;
    const auto traj = simulate_cost(g, k1, k2, T, 1.0);
    const double acl2 = c.a_cl * c.a_cl;
    const double bound1 = (g.numeric.q[0] + g.numeric.r[0] * k1 * k1) * std::pow(acl2, T) / (1 - acl2);
    EXPECT_LE(std::abs(c.j1 - traj.back().partial_cost_1), bound1 * (1 + 1e-9) + 1e-12 * c.j1);
    ++done;
  }
}

TEST(CrossVerify, AgreesOnKnownGames) {
  GameParams ones;
  ones.a = 1;
  const VerifyReport rep = cross_verify(ones);
  EXPECT_TRUE(rep.all_agree());
  EXPECT_TRUE(rep.disagreements.empty());
  EXPECT_EQ(rep.br_starts.size(), 8u);

  GameParams three;
  three.a = BigRational(39, 10);
  three.q1 = BigRational(1, 2);
  three.r2 = 2;
  const VerifyReport rep3 = cross_verify(three);
  EXPECT_TRUE(rep3.all_agree());
  EXPECT_EQ(rep3.grid.size(), 3u);
}

TEST(CrossVerify, SeedJittersStarts) {
  GameParams ones;
  ones.a = 1;
  VerifyOptions o;
  o.seed = 42;
  const VerifyReport a = cross_verify(ones, o);
  const VerifyReport b = cross_verify(ones, o);
  EXPECT_EQ(a.br_starts, b.br_starts);
  EXPECT_NE(a.br_starts, cross_verify(ones).br_starts);
  EXPECT_TRUE(a.all_agree());
}

TEST(CrossVerify, FaultIsDetected) {
  GameParams ones;
  ones.a = 1;
  VerifyOptions o;
  o.grid.fault_negate_state_cost = true;
  const VerifyReport rep = cross_verify(ones, o);
  EXPECT_FALSE(rep.all_agree());
  EXPECT_FALSE(rep.disagreements.empty());
}

}  // namespace
}  // namespace lqnash
