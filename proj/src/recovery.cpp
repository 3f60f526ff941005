#include "nsclab/recovery.hpp"

#include "nsclab/combin.hpp"
#include "nsclab/linalg.hpp"
#include "nsclab/rng.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>

namespace nsclab {

double lp_objective(const Vec& x, double p, double zero_tol) {
  if (p < 0.0 || p > 1.0)
    raise(ErrorCode::InvalidArgument, "lp_objective: p must lie in [0, 1]");
  double sum = 0.0;
  if (p == 0.0) {
    const double scale = x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
    const double threshold = zero_tol * scale;
    for (Index i = 0; i < x.size(); ++i)
      if (std::abs(x(i)) > threshold) sum += 1.0;
    return sum;
  }
  for (Index i = 0; i < x.size(); ++i) sum += std::pow(std::abs(x(i)), p);
  return sum;
}

RecoveryInstance make_instance(const SensingMatrix& a, const Vec& x_true) {
  if (x_true.size() != a.cols())
    raise(ErrorCode::WrongDimension, "make_instance: x_true length");
  RecoveryInstance inst;
  inst.a = a;
  inst.x_true = x_true;
  inst.sparsity = static_cast<int>(lp_objective(x_true, 0.0));
  inst.y = a.entries * x_true;
  return inst;
}

L0Result solve_l0_exhaustive(const SensingMatrix& a, const Vec& y, int k_max,
                             double feas_tol, int max_cols, int solution_cap) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (n > max_cols)
    raise(ErrorCode::TooLarge, "solve_l0_exhaustive: too many columns");
  if (y.size() != m)
    raise(ErrorCode::WrongDimension, "solve_l0_exhaustive: y length");
  k_max = std::min<int>(k_max, static_cast<int>(m));

  const double accept = feas_tol * (1.0 + y.norm());
  L0Result out;

  for (int s = 0; s <= k_max; ++s) {
    std::vector<Vec> found;
    if (s == 0) {
      if (y.norm() <= accept) found.push_back(Vec::Zero(n));
    } else {
      std::vector<Index> combo = first_combination(s);
      do {
        Mat sub(m, s);
        for (int j = 0; j < s; ++j) sub.col(j) = a.entries.col(combo[static_cast<size_t>(j)]);
        const Vec coef = sub.colPivHouseholderQr().solve(y);
        if ((sub * coef - y).norm() <= accept) {
          Vec x = Vec::Zero(n);
          for (int j = 0; j < s; ++j) x(combo[static_cast<size_t>(j)]) = coef(j);
          found.push_back(std::move(x));
          if (static_cast<int>(found.size()) >= solution_cap) break;
        }
      } while (next_combination(combo, n));
    }
    if (!found.empty()) {
      // Distinct supports can land on the same vector; deduplicate before
      // deciding uniqueness.
      std::vector<Vec> distinct;
      for (const Vec& x : found) {
        bool dup = false;
        for (const Vec& seen : distinct) {
          if ((x - seen).lpNorm<Eigen::Infinity>() <=
              1e-8 * (1.0 + seen.lpNorm<Eigen::Infinity>())) {
            dup = true;
            break;
          }
        }
        if (!dup) distinct.push_back(x);
      }
      out.solutions = std::move(distinct);
      out.support_size = s;
      out.unique = out.solutions.size() == 1;
      return out;
    }
  }
  raise(ErrorCode::NoSolutionWithinKmax,
        "solve_l0_exhaustive: no feasible support of size <= " +
            std::to_string(k_max));
}

namespace {

SolverResult irls_single(const SensingMatrix& a, const Vec& y, double p,
                         const IrlsConfig& cfg, const Vec& x0) {
  SolverResult res;
  Vec x = x0;
  res.worst_residual = (a.entries * x - y).norm();
  int total_iters = 0;
  bool plateaued = false;

  for (double eps = cfg.eps_start;; eps /= 10.0) {
    // Smoothed objective sum (x_i^2 + eps^2)^{p/2} drives the plateau test.
    // Early stages only need enough progress to justify shrinking eps; the
    // final stage polishes to near machine precision within its budget.
    const bool last_stage = eps <= cfg.eps_floor * (1.0 + 1e-12);
    const double plateau = last_stage ? 1e-13 : cfg.plateau_rel_change;
    double smoothed = 0.0;
    for (Index i = 0; i < x.size(); ++i)
      smoothed += std::pow(x(i) * x(i) + eps * eps, p / 2.0);

    plateaued = false;
    for (int it = 0; it < cfg.max_iters_per_stage; ++it) {
      Vec w(x.size());
      for (Index i = 0; i < x.size(); ++i)
        w(i) = std::pow(x(i) * x(i) + eps * eps, (p - 2.0) / 2.0);
      x = weighted_min_norm_solve(a, y, w);
      ++total_iters;
      res.worst_residual =
          std::max(res.worst_residual, (a.entries * x - y).norm());

      double next_smoothed = 0.0;
      for (Index i = 0; i < x.size(); ++i)
        next_smoothed += std::pow(x(i) * x(i) + eps * eps, p / 2.0);
      const double change = std::abs(next_smoothed - smoothed);
      smoothed = next_smoothed;
      if (change <= plateau * std::max(1.0, std::abs(smoothed))) {
        plateaued = true;
        break;
      }
    }
    res.stage_objectives.push_back(lp_objective(x, p));
    if (eps <= cfg.eps_floor * (1.0 + 1e-12)) break;
  }

  res.x_hat = x;
  res.objective = lp_objective(x, p);
  res.residual = (a.entries * x - y).norm();
  res.iterations = total_iters;
  res.converged = plateaued;
  return res;
}

}  // namespace

SolverResult irls_lp(const SensingMatrix& a, const Vec& y, double p,
                     const IrlsConfig& cfg) {
  if (p <= 0.0 || p > 1.0)
    raise(ErrorCode::InvalidArgument, "irls_lp: p must lie in (0, 1]");
  if (y.size() != a.rows())
    raise(ErrorCode::WrongDimension, "irls_lp: y length");
  if (rank(a, cfg.rank_tol) < a.rows())
    raise(ErrorCode::RankDeficient, "irls_lp: A must have full row rank");

  const Vec unit = Vec::Ones(a.cols());
  const Vec x_l2 = weighted_min_norm_solve(a, y, unit);

  SolverResult best = irls_single(a, y, p, cfg, x_l2);
  double worst = best.worst_residual;
  for (int r = 1; r < cfg.restarts; ++r) {
    SplitStream stream =
        SplitStream::derive(cfg.seed, rng_tag::kPerturb, static_cast<std::uint64_t>(r));
    Vec w(a.cols());
    for (Index i = 0; i < w.size(); ++i) w(i) = std::exp(stream.next_gaussian());
    const Vec x0 = weighted_min_norm_solve(a, y, w);
    SolverResult cand = irls_single(a, y, p, cfg, x0);
    worst = std::max(worst, cand.worst_residual);
    if (cand.objective < best.objective) best = std::move(cand);
  }
  best.worst_residual = worst;
  return best;
}

WitnessResult failure_witness(const SensingMatrix& a, const Certificate& cert,
                              double p) {
  if (cert.theta_value < 1.0)
    raise(ErrorCode::NotAWitness,
          "failure_witness: certificate ratio below one cannot witness failure");
  if (cert.z.size() != a.cols())
    raise(ErrorCode::WrongDimension, "failure_witness: certificate dimension");

  Vec x_star = Vec::Zero(a.cols());
  for (Index i : cert.support.indices()) x_star(i) = cert.z(i);
  const Vec x_alt = x_star - cert.z;  // equals -z off the support

  WitnessResult out;
  out.instance = make_instance(a, x_star);
  out.x_alt = x_alt;
  out.objective_star = lp_objective(x_star, p);
  out.objective_alt = lp_objective(x_alt, p);
  out.p = p;
  return out;
}

ExperimentReport recovery_experiment(const SensingMatrix& a, int k, double p,
                                     int trials, std::uint64_t seed,
                                     const ExperimentConfig& config) {
  if (trials < 1)
    raise(ErrorCode::InvalidArgument, "recovery_experiment: trials must be >= 1");
  if (k < 1 || k > a.cols())
    raise(ErrorCode::InvalidArgument, "recovery_experiment: k out of range");

  ExperimentReport report;
  report.trials = trials;
  report.outcomes.resize(static_cast<size_t>(trials));

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed =
        SplitStream::derive(seed, rng_tag::kTrial, static_cast<std::uint64_t>(t))
            .next_u64();
    const Vec x_true = gen_sparse_vector(a.cols(), k, config.value_dist, trial_seed);
    const Vec y = a.entries * x_true;

    TrialOutcome outcome;
    if (p == 0.0) {
      const L0Result l0 = solve_l0_exhaustive(a, y, k);
      const Vec& x_hat = l0.solutions.front();
      outcome.inf_error = (x_hat - x_true).lpNorm<Eigen::Infinity>();
      outcome.objective = lp_objective(x_hat, 0.0);
      outcome.converged = true;
      outcome.success =
          l0.unique && outcome.inf_error <= config.recover_tol;
    } else {
      IrlsConfig irls = config.irls;
      irls.seed = trial_seed;
      const SolverResult sol = irls_lp(a, y, p, irls);
      outcome.inf_error = (sol.x_hat - x_true).lpNorm<Eigen::Infinity>();
      outcome.objective = sol.objective;
      outcome.converged = sol.converged;
      outcome.success = outcome.inf_error <= config.recover_tol;
    }
    if (outcome.success) ++report.successes;
    report.outcomes[static_cast<size_t>(t)] = outcome;
  }
  report.rate = double(report.successes) / double(trials);
  return report;
}

}  // namespace nsclab
