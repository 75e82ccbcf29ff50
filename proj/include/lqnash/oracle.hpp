#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lqnash/game.hpp"
#include "lqnash/solver.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash {

// Brute-force checks that never look at g.

// br1(br2(x)) - x.
double h_eval(const NormalizedGame& norm, double x);

struct BrIterationResult {
  bool converged = false;
  double k1 = 0;
  double k2 = 0;
  int iterations = 0;
  double last_step = 0;
};

// x <- br1(br2(x)) from k_start. Non-convergence is reported, not thrown.
BrIterationResult br_iteration(const NormalizedGame& norm, double k_start, int max_iter, double tol);

struct GridScanOptions {
  int newton_max_iter = 50;
  double dedupe_tol = 1e-6;
  double accept_residual = 1e-8;
  // Test-only fault: flips the sign of the state-cost term d*q in both
  // residuals, which moves their common zeros.
  bool fault_negate_state_cost = false;
};

using PolicyPair = std::pair<double, double>;

// Scans an n x n grid over (0, a)^2 for cells where both residual surfaces
// change sign, polishes each with damped Newton, keeps stabilizing pairs in
// (0, a)^2 and merges duplicates. Sorted by ascending k2. Cells are processed
// in parallel; the result does not depend on the thread count.
std::vector<PolicyPair> grid_scan(const NormalizedGame& norm, int n, const GridScanOptions& options = {});

// Single-threaded reference for grid_scan.
std::vector<PolicyPair> grid_scan_serial(const NormalizedGame& norm, int n, const GridScanOptions& options = {});

// Res_k1(p1, p2) as a polynomial in k2 (degree <= 9). Throws
// std::runtime_error if it vanishes identically.
UniPoly resultant_elimination(const NormalizedGame& norm);

// True when gcd(res, g) has as many distinct roots in (0, a) as g does, so
// every root of g there is also a root of res.
bool contains_roots_in_range(const UniPoly& res, const UniPoly& g, const BigRational& a);

struct TrajectorySample {
  int t = 0;
  double x = 0;
  double u1 = 0;
  double u2 = 0;
  double partial_cost_1 = 0;
  double partial_cost_2 = 0;
};

// t = 0 .. horizon-1 of x(t+1) = (a - k1 - k2) x(t); partial costs include
// the stage cost at t.
std::vector<TrajectorySample> simulate_cost(const NormalizedGame& norm, double k1, double k2, int horizon,
                                            double x0);

struct VerifyOptions {
  int grid_n = 512;
  double tol = 1e-6;
  int br_starts = 8;
  int br_max_iter = 20000;
  double br_tol = 1e-13;
  int horizon = 200;
  std::optional<std::uint64_t> seed;  // jitter br starts when set
  GridScanOptions grid;
};

struct VerifyReport {
  SolveReport solve;
  std::vector<PolicyPair> grid;
  std::vector<double> br_starts;
  std::vector<BrIterationResult> br;
  bool grid_agrees = false;
  bool br_agrees = false;
  bool resultant_agrees = false;
  bool simulation_agrees = false;
  std::vector<double> simulation_error;  // per equilibrium
  std::vector<std::string> disagreements;

  bool all_agree() const { return grid_agrees && br_agrees && resultant_agrees && simulation_agrees; }
};

// Runs every oracle against solve() on the same (normalized) game.
VerifyReport cross_verify(const GameParams& params, const VerifyOptions& options = {});

}  // namespace lqnash
