#pragma once

#include "nsclab/matgen.hpp"
#include "nsclab/nsc.hpp"
#include "nsclab/types.hpp"

#include <cstdint>
#include <vector>

namespace nsclab {

/// A planted recovery problem: y = A * x_true with known sparsity.
struct RecoveryInstance {
  SensingMatrix a;
  Vec x_true;
  int sparsity = 0;
  Vec y;
};

RecoveryInstance make_instance(const SensingMatrix& a, const Vec& x_true);

struct SolverResult {
  Vec x_hat;
  double objective = 0.0;  // ||x_hat||_p^p
  double residual = 0.0;   // ||A x_hat - y||
  int iterations = 0;
  bool converged = false;
  bool success = false;  // filled by callers that know x_true
  double worst_residual = 0.0;          // largest residual over all iterates
  std::vector<double> stage_objectives;  // true objective at each eps stage end
};

struct L0Result {
  std::vector<Vec> solutions;  // all minimizers at the first feasible size
  int support_size = 0;
  bool unique = false;
};

/// Exhaustive l0 solver: ascends support sizes, least-squares fit per
/// support, accepts at residual <= feas_tol * (1 + ||y||).
L0Result solve_l0_exhaustive(const SensingMatrix& a, const Vec& y, int k_max,
                             double feas_tol = 1e-8, int max_cols = 20,
                             int solution_cap = 64);

struct IrlsConfig {
  double eps_start = 1.0;
  double eps_floor = 1e-9;
  double plateau_rel_change = 1e-6;
  int max_iters_per_stage = 500;
  double feas_tol = 1e-8;
  int restarts = 8;
  std::uint64_t seed = 0;
  double rank_tol = 0.0;
};

/// Iteratively reweighted least squares for min ||x||_p^p s.t. Ax = y,
/// p in (0, 1]. Weights are (x_i^2 + eps^2)^{(p-2)/2}, so each step is a
/// weighted minimum-norm solve; eps shrinks when the smoothed objective
/// plateaus. A heuristic for p < 1; restarts perturb the initial point.
SolverResult irls_lp(const SensingMatrix& a, const Vec& y, double p,
                     const IrlsConfig& config = {});

struct WitnessResult {
  RecoveryInstance instance;
  Vec x_alt;
  double objective_star = 0.0;  // ||x*||_p^p
  double objective_alt = 0.0;   // ||x'||_p^p
  double p = 1.0;
};

/// Turns a certificate with theta >= 1 into a concrete recovery failure:
/// x* = z restricted to S and x' = x* - z share the same measurements and
/// ||x'||_p^p <= ||x*||_p^p (strictly when theta > 1).
WitnessResult failure_witness(const SensingMatrix& a, const Certificate& cert,
                              double p);

struct TrialOutcome {
  bool success = false;
  double inf_error = 0.0;
  double objective = 0.0;
  bool converged = false;
};

struct ExperimentReport {
  int trials = 0;
  int successes = 0;
  double rate = 0.0;
  std::vector<TrialOutcome> outcomes;
};

struct ExperimentConfig {
  double recover_tol = 1e-5;
  IrlsConfig irls;
  Dist value_dist = Dist::Uniform;
};

/// Plants k-sparse signals with random supports and measures how often the
/// solver recovers them; deterministic per seed.
ExperimentReport recovery_experiment(const SensingMatrix& a, int k, double p,
                                     int trials, std::uint64_t seed,
                                     const ExperimentConfig& config = {});

double lp_objective(const Vec& x, double p, double zero_tol = 1e-9);

}  // namespace nsclab
