#pragma once

#include "nsclab/nsc.hpp"

#include <vector>

namespace nsclab {

struct KStarResult {
  int value = 0;
  bool all_exact = true;       // every evaluation used an exact path
  int lower_bound_evals = 0;
};

struct StaircaseJump {
  double p_lo = 0.0;
  double p_hi = 0.0;
  int from = 0;
  int to = 0;
};

/// k_p*(A) sampled on a p grid: non-increasing with unit drops.
struct StaircaseCurve {
  std::vector<double> grid;
  std::vector<int> values;
  std::vector<StaircaseJump> jumps;
  bool all_exact = true;
};

enum class PStarKind { Empty, Interior, FullRange };
const char* to_string(PStarKind kind);

/// Reconstruction exponent p_k*(A) with its bisection bracket.
struct ReconstructionExponent {
  int k = 0;
  PStarKind kind = PStarKind::Empty;
  double p_star = 0.0;  // right end of the bracket when Interior
  double lo = 0.0;
  double hi = 0.0;
  bool status_downgrade = false;  // some evaluation was only a lower bound
};

struct GammaCell {
  double value = 0.0;
  NscStatus status = NscStatus::Exact;
};

/// gamma(l_p, A, k) over a (p, k) grid, row per k.
struct GammaTable {
  std::vector<double> ps;
  std::vector<int> ks;
  std::vector<std::vector<GammaCell>> rows;  // rows[k index][p index]
};

/// Estimates along an ascending p grid for fixed k. Each point warm-starts
/// from the previous certificate and sampling-path values are closed under
/// re-evaluation of earlier certificates, which makes the returned values
/// non-decreasing in p without ever leaving the feasible set.
std::vector<NscEstimate> gamma_sweep(const NscContext& ctx,
                                     const std::vector<double>& ps, int k,
                                     const EstimatorConfig& config);

/// Largest k with gamma(l_p, A, k) < 1 - margin, scanned incrementally.
KStarResult k_star(const NscContext& ctx, double p, double margin = 1e-6,
                   const EstimatorConfig& config = {});

/// Classifies the set of good exponents for sparsity k: Empty, FullRange,
/// or an Interior crossing bracketed to width tol_p by bisection.
ReconstructionExponent p_star(const NscContext& ctx, int k,
                              double tol_p = 1e-3,
                              const EstimatorConfig& config = {});

StaircaseCurve staircase(const NscContext& ctx, const std::vector<double>& grid,
                         double margin = 1e-6,
                         const EstimatorConfig& config = {}, int jobs = 1);

GammaTable gamma_curves(const NscContext& ctx, const std::vector<double>& ps,
                        const std::vector<int>& ks,
                        const EstimatorConfig& config = {}, int jobs = 1);

/// Uniform grid helper: count points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, int count);

}  // namespace nsclab
