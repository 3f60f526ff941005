#include "nsclab/verify.hpp"

#include "nsclab/combin.hpp"
#include "nsclab/derived.hpp"
#include "nsclab/matgen.hpp"
#include "nsclab/nsc.hpp"
#include "nsclab/parallel.hpp"
#include "nsclab/recovery.hpp"
#include "nsclab/rng.hpp"
#include "nsclab/spark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

namespace nsclab {

bool VerificationReport::pass() const {
  for (const auto& prop : properties)
    if (!prop.pass) return false;
  return true;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

struct Collector {
  VerificationReport report;
  Clock::time_point t0 = Clock::now();
  std::mutex mutex;

  explicit Collector(std::string suite, int trials) {
    report.suite = std::move(suite);
    report.trials = trials;
  }

  void count(NscStatus status) {
    std::lock_guard<std::mutex> lock(mutex);
    switch (status) {
      case NscStatus::Exact: ++report.exact_evals; break;
      case NscStatus::LowerBound: ++report.lower_bound_evals; break;
      case NscStatus::Infinite: ++report.infinite_evals; break;
    }
  }

  void property(const std::string& name, bool pass, double margin,
                const std::string& detail = "") {
    report.properties.push_back(PropertyResult{name, pass, margin, detail});
  }

  VerificationReport finish() {
    report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                         .count();
    return std::move(report);
  }
};

SensingMatrix gaussian(Index m, Index n, std::uint64_t seed,
                       bool normalize = false) {
  GeneratorSpec spec;
  spec.dist = Dist::Gaussian;
  spec.rows = m;
  spec.cols = n;
  spec.seed = seed;
  spec.normalize_columns = normalize;
  return gen_matrix(spec);
}

SensingMatrix counterexample_matrix() {
  Mat m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, s;
  return SensingMatrix(m);
}

// Null space span([1, 1, -1]): equal nonzero magnitudes, so gamma is
// constant in p.
SensingMatrix equal_magnitude_fixture() {
  Mat m(2, 3);
  m << 1, 0, 1, 0, 1, 1;
  return SensingMatrix(m);
}

// ---------------------------------------------------------------------------
// 1. l0 closed form and finiteness on seeded Gaussian draws.
// ---------------------------------------------------------------------------
VerificationReport criterion_l0_closed_form(const SuiteConfig& cfg) {
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  Collector col("l0-closed-form", trials);

  bool spark_ok = true, formula_ok = true, infinite_ok = true;
  double worst_diff = 0.0;
  std::string detail;

  const Index sizes[2][2] = {{4, 8}, {4, 6}};
  for (const auto& size : sizes) {
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
      const SensingMatrix a = gaussian(size[0], size[1], seed);
      const NscContext ctx(a);
      if (ctx.spark().spark != 5) {
        spark_ok = false;
        detail = "spark != 5 at " + a.id();
        continue;
      }
      for (int k = 1; k <= 4; ++k) {
        const NscEstimate est = nsc_estimate(ctx, NscQuery{0.0, k});
        col.count(est.status);
        const double expected = double(k) / double(5 - k);
        const double diff = std::abs(est.value - expected);
        worst_diff = std::max(worst_diff, diff);
        if (diff != 0.0 || est.status != NscStatus::Exact) {
          formula_ok = false;
          detail = "gamma(0," + std::to_string(k) + ") off at " + a.id();
        }
      }
      const NscEstimate top = nsc_estimate(ctx, NscQuery{0.0, 5});
      col.count(top.status);
      if (top.status != NscStatus::Infinite) {
        infinite_ok = false;
        detail = "gamma(0,5) not infinite at " + a.id();
      }
    }
  }

  col.property("spark = M+1 on every draw", spark_ok, spark_ok ? 0.0 : -1.0,
               detail);
  col.property("gamma(l0,k) = k/(5-k) exactly for k=1..4", formula_ok,
               -worst_diff, detail);
  col.property("gamma(l0,5) is Infinite", infinite_ok,
               infinite_ok ? 0.0 : -1.0, detail);
  return col.finish();
}

// ---------------------------------------------------------------------------
// 2. Forced multistart equals the nullity-1 closed form.
// ---------------------------------------------------------------------------
VerificationReport criterion_d1_oracle(const SuiteConfig& cfg) {
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  Collector col("d1-oracle-equivalence", trials);

  double worst = 0.0;
  std::string detail;
  bool ok = true;

  for (Index m : {3, 4, 5}) {
    std::vector<double> per_trial(static_cast<size_t>(trials), 0.0);
    parallel_for(trials, cfg.jobs, [&](int t) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
      const SensingMatrix a = gaussian(m, m + 1, seed);
      const NscContext ctx(a);
      double local = 0.0;
      for (int pi = 0; pi <= 10; ++pi) {
        const double p = pi / 10.0;
        for (int k = 1; k <= 2; ++k) {
          const NscEstimate closed = nsc_exact_d1(ctx.basis(), p, k);
          EstimatorConfig forced;
          forced.force_general = true;
          forced.seed = seed;
          const NscEstimate est = nsc_estimate(ctx, NscQuery{p, k}, forced);
          local = std::max(local, std::abs(closed.value - est.value));
        }
      }
      per_trial[static_cast<size_t>(t)] = local;
    });
    for (int t = 0; t < trials; ++t) {
      worst = std::max(worst, per_trial[static_cast<size_t>(t)]);
      if (per_trial[static_cast<size_t>(t)] > 1e-6) {
        ok = false;
        detail = "M=" + std::to_string(m) + " trial " + std::to_string(t);
      }
    }
  }
  col.property("forced estimator matches d=1 closed form within 1e-6", ok,
               1e-6 - worst, detail);
  return col.finish();
}

// ---------------------------------------------------------------------------
// 3. The 2x2 counterexample: gamma identically one, nothing recoverable.
// ---------------------------------------------------------------------------
VerificationReport criterion_counterexample(const SuiteConfig& cfg) {
  Collector col("counterexample", 1);
  const SensingMatrix a = counterexample_matrix();
  const NscContext ctx(a);
  const std::vector<double> grid = uniform_grid(0.0, 1.0, 101);

  double worst_dev = 0.0;
  bool kstar_ok = true;
  for (double p : grid) {
    const NscEstimate est = nsc_estimate(ctx, NscQuery{p, 1});
    col.count(est.status);
    worst_dev = std::max(worst_dev, std::abs(est.value - 1.0));
    EstimatorConfig est_cfg;
    est_cfg.seed = cfg.seed;
    if (k_star(ctx, p, 1e-6, est_cfg).value != 0) kstar_ok = false;
  }
  col.property("gamma(lp,A,1) = 1 within 1e-9 on 101-point grid",
               worst_dev <= 1e-9, 1e-9 - worst_dev);
  col.property("k_star = 0 everywhere", kstar_ok, kstar_ok ? 0.0 : -1.0);
  return col.finish();
}

// ---------------------------------------------------------------------------
// 4. Strict increase in k on exact-oracle fixtures.
// ---------------------------------------------------------------------------
VerificationReport criterion_thm1(const SuiteConfig& cfg) {
  const int trials = cfg.trials > 0 ? cfg.trials : 50;
  Collector col("thm1-k-monotonicity", trials);

  const double ps[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> min_gap(static_cast<size_t>(trials), kInf);
  std::vector<int> non_exact(static_cast<size_t>(trials), 0);

  parallel_for(trials, cfg.jobs, [&](int t) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
    const SensingMatrix a = gaussian(4, 6, seed);
    const NscContext ctx(a);
    EstimatorConfig est_cfg;
    est_cfg.seed = seed;
    for (double p : ps) {
      double prev = -kInf;
      for (int k = 1; k <= 4; ++k) {
        const NscEstimate est = nsc_estimate(ctx, NscQuery{p, k}, est_cfg);
        col.count(est.status);
        if (est.status != NscStatus::Exact) ++non_exact[static_cast<size_t>(t)];
        if (k > 1)
          min_gap[static_cast<size_t>(t)] =
              std::min(min_gap[static_cast<size_t>(t)], est.value - prev);
        prev = est.value;
      }
    }
  });

  double worst_gap = kInf;
  int total_non_exact = 0;
  for (int t = 0; t < trials; ++t) {
    worst_gap = std::min(worst_gap, min_gap[static_cast<size_t>(t)]);
    total_non_exact += non_exact[static_cast<size_t>(t)];
  }
  col.property("gamma strictly increases in k (k=1..4)", worst_gap > 0.0,
               worst_gap);
  col.property("all evaluations used exact paths", total_non_exact == 0,
               total_non_exact == 0 ? 0.0 : -double(total_non_exact));
  return col.finish();
}

// ---------------------------------------------------------------------------
// 5. Continuity surrogate: shrinking empirical modulus, non-decreasing in p.
// ---------------------------------------------------------------------------
VerificationReport criterion_thm2(const SuiteConfig& cfg) {
  const int trials = cfg.trials > 0 ? cfg.trials : 50;
  Collector col("thm2-continuity", trials);

  const std::vector<double> grid = uniform_grid(0.0, 1.0, 201);  // step 0.005
  std::vector<double> mono_margin(static_cast<size_t>(trials), kInf);
  std::vector<double> modulus_margin(static_cast<size_t>(trials), kInf);

  parallel_for(trials, cfg.jobs, [&](int t) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
    const SensingMatrix a = gaussian(4, 6, seed);
    const NscContext ctx(a);
    for (int k = 1; k <= 3; ++k) {
      EstimatorConfig est_cfg;
      est_cfg.seed = seed + static_cast<std::uint64_t>(k) * 1000003ULL;
      const auto sweep = gamma_sweep(ctx, grid, k, est_cfg);
      for (const auto& est : sweep) col.count(est.status);

      for (size_t j = 0; j + 1 < sweep.size(); ++j)
        mono_margin[static_cast<size_t>(t)] =
            std::min(mono_margin[static_cast<size_t>(t)],
                     sweep[j + 1].value - sweep[j].value + 1e-9);

      // Empirical modulus at offsets 4, 2, 1 grid steps (delta = 0.02,
      // 0.01, 0.005) must not grow as delta halves.
      double mods[3] = {0.0, 0.0, 0.0};
      const int offsets[3] = {4, 2, 1};
      for (int oi = 0; oi < 3; ++oi) {
        for (size_t j = 0; j + offsets[oi] < sweep.size(); ++j)
          mods[oi] = std::max(
              mods[oi], std::abs(sweep[j + offsets[oi]].value - sweep[j].value));
      }
      modulus_margin[static_cast<size_t>(t)] =
          std::min({modulus_margin[static_cast<size_t>(t)], mods[0] - mods[1],
                    mods[1] - mods[2]});
    }
  });

  double worst_mono = kInf, worst_mod = kInf;
  for (int t = 0; t < trials; ++t) {
    worst_mono = std::min(worst_mono, mono_margin[static_cast<size_t>(t)]);
    worst_mod = std::min(worst_mod, modulus_margin[static_cast<size_t>(t)]);
  }
  col.property("gamma non-decreasing in p within 1e-9", worst_mono >= 0.0,
               worst_mono);
  col.property("empirical modulus non-increasing as delta halves",
               worst_mod >= 0.0, worst_mod);
  return col.finish();
}

// ---------------------------------------------------------------------------
// 6. Strict increase in p on random draws; constancy on the equal-magnitude
//    fixture.
// ---------------------------------------------------------------------------
VerificationReport criterion_thm3(const SuiteConfig& cfg) {
  const int trials = cfg.trials > 0 ? cfg.trials : 30;
  Collector col("thm3-p-monotonicity", trials);

  const std::vector<double> grid = uniform_grid(0.0, 1.0, 11);
  std::vector<double> min_step(static_cast<size_t>(trials), kInf);
  std::vector<double> min_gap(static_cast<size_t>(trials), kInf);

  parallel_for(trials, cfg.jobs, [&](int t) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
    const SensingMatrix a = gaussian(4, 6, seed);
    const NscContext ctx(a);
    for (int k = 1; k <= 2; ++k) {
      EstimatorConfig est_cfg;
      est_cfg.seed = seed + static_cast<std::uint64_t>(k) * 1000003ULL;
      const auto sweep = gamma_sweep(ctx, grid, k, est_cfg);
      for (const auto& est : sweep) col.count(est.status);
      for (size_t j = 0; j + 1 < sweep.size(); ++j)
        min_step[static_cast<size_t>(t)] =
            std::min(min_step[static_cast<size_t>(t)],
                     sweep[j + 1].value - sweep[j].value);
      min_gap[static_cast<size_t>(t)] =
          std::min(min_gap[static_cast<size_t>(t)],
                   sweep.back().value - sweep.front().value);
    }
  });

  double worst_step = kInf, worst_gap = kInf;
  for (int t = 0; t < trials; ++t) {
    worst_step = std::min(worst_step, min_step[static_cast<size_t>(t)]);
    worst_gap = std::min(worst_gap, min_gap[static_cast<size_t>(t)]);
  }
  col.property("gamma strictly increasing across 11-point p grid",
               worst_step > 1e-9, worst_step - 1e-9);
  col.property("gamma(l1) - gamma(l0) > 0.01", worst_gap > 0.01,
               worst_gap - 0.01);

  // Equality condition: equal nonzero magnitudes freeze gamma in p.
  const NscContext fixture(equal_magnitude_fixture());
  double lo = kInf, hi = -kInf;
  for (double p : grid) {
    const NscEstimate est = nsc_estimate(fixture, NscQuery{p, 1});
    col.count(est.status);
    lo = std::min(lo, est.value);
    hi = std::max(hi, est.value);
  }
  col.property("equal-magnitude fixture has constant gamma",
               hi - lo <= 1e-12 && std::abs(lo - 0.5) <= 1e-12,
               1e-12 - (hi - lo));
  return col.finish();
}

// ---------------------------------------------------------------------------
// 7. Definition-1 equivalence at desk scale: certified-good fixtures recover
//    on every support; certified-bad certificates yield failure witnesses.
// ---------------------------------------------------------------------------
VerificationReport criterion_recovery(const SuiteConfig& cfg) {
  const int fixtures = cfg.trials > 0 ? cfg.trials : 10;
  Collector col("recovery-equivalence", fixtures);

  // Good side: exact gamma(l1, A, 1) <= 0.95 on column-normalized draws.
  int found = 0;
  double worst_err = 0.0;
  bool recover_ok = true;
  std::string detail;
  for (std::uint64_t s = cfg.seed; s < cfg.seed + 400 && found < fixtures; ++s) {
    const SensingMatrix a = gaussian(4, 8, s, true);
    const NscContext ctx(a);
    const NscEstimate gamma1 = nsc_estimate(ctx, NscQuery{1.0, 1});
    col.count(gamma1.status);
    if (gamma1.status != NscStatus::Exact || gamma1.value > 0.95) continue;
    ++found;
    for (Index j = 0; j < a.cols(); ++j) {
      for (int r = 0; r < 3; ++r) {
        SplitStream stream = SplitStream::derive(
            s, rng_tag::kValues,
            static_cast<std::uint64_t>(j) * 8 + static_cast<std::uint64_t>(r));
        Vec x_true = Vec::Zero(a.cols());
        const double sign = stream.next_unit() < 0.5 ? -1.0 : 1.0;
        x_true(j) = sign * (0.1 + 0.9 * stream.next_unit());
        const Vec y = a.entries * x_true;
        IrlsConfig irls;
        irls.seed = stream.next_u64();
        const SolverResult sol = irls_lp(a, y, 1.0, irls);
        const double err = (sol.x_hat - x_true).lpNorm<Eigen::Infinity>();
        worst_err = std::max(worst_err, err);
        if (err > 1e-5) {
          recover_ok = false;
          detail = "support " + std::to_string(j) + " at " + a.id();
        }
      }
    }
  }
  col.property("found certified-good fixtures (gamma <= 0.95 Exact)",
               found == fixtures, double(found - fixtures));
  col.property("IRLS at p=1 recovers every size-1 support x 3 draws",
               recover_ok, 1e-5 - worst_err, detail);

  // Bad side: certificates with ratio >= 1.05 produce verified witnesses.
  int witnesses = 0;
  bool witness_ok = true;
  double worst_margin = kInf;
  std::string wit_detail;
  const auto try_witness = [&](const SensingMatrix& a, const NscEstimate& est,
                               double p) {
    if (!est.certificate || est.certificate->theta_value < 1.05) return;
    ++witnesses;
    const WitnessResult wit = failure_witness(a, *est.certificate, p);
    const double gap = wit.objective_star - wit.objective_alt;
    worst_margin = std::min(worst_margin, gap);
    const double feas =
        (a.entries * wit.x_alt - wit.instance.y).norm();
    if (gap <= 0.0 || feas > 1e-9 * (1.0 + wit.instance.y.norm()) ||
        wit.instance.sparsity > est.certificate->support.size()) {
      witness_ok = false;
      wit_detail = "witness failed at " + a.id();
    }
  };
  for (std::uint64_t s = cfg.seed; s < cfg.seed + 100 && witnesses < fixtures / 2;
       ++s) {
    const SensingMatrix a = gaussian(4, 8, s);
    const NscContext ctx(a);
    const NscEstimate est = nsc_estimate(ctx, NscQuery{1.0, 3});
    col.count(est.status);
    try_witness(a, est, 1.0);
  }
  for (std::uint64_t s = cfg.seed; s < cfg.seed + 100 && witnesses < fixtures;
       ++s) {
    const SensingMatrix a = gaussian(4, 6, s);
    const NscContext ctx(a);
    const NscEstimate est = nsc_estimate(ctx, NscQuery{0.5, 3});
    col.count(est.status);
    try_witness(a, est, 0.5);
  }
  col.property("found witness fixtures (theta >= 1.05)", witnesses >= fixtures,
               double(witnesses - fixtures));
  col.property("every witness has ||x'||_p^p < ||x*||_p^p by direct evaluation",
               witness_ok, worst_margin, wit_detail);
  return col.finish();
}

// ---------------------------------------------------------------------------
// 8. Staircase structure on 101-point grids.
// ---------------------------------------------------------------------------
VerificationReport criterion_staircase(const SuiteConfig& cfg) {
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  Collector col("staircase-structure", trials);

  const std::vector<double> grid = uniform_grid(0.0, 1.0, 101);
  std::vector<int> start_vals(static_cast<size_t>(trials), -1);
  std::vector<bool> mono(static_cast<size_t>(trials), true);
  std::vector<bool> unit(static_cast<size_t>(trials), true);

  parallel_for(trials, cfg.jobs, [&](int t) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
    const SensingMatrix a = gaussian(4, 8, seed);
    const NscContext ctx(a);
    EstimatorConfig est_cfg;
    est_cfg.seed = seed;
    const StaircaseCurve curve = staircase(ctx, grid, 1e-6, est_cfg);
    start_vals[static_cast<size_t>(t)] = curve.values.front();
    for (size_t j = 0; j + 1 < curve.values.size(); ++j) {
      if (curve.values[j + 1] > curve.values[j]) mono[static_cast<size_t>(t)] = false;
    }
    for (const auto& jump : curve.jumps) {
      if (jump.from - jump.to != 1) unit[static_cast<size_t>(t)] = false;
    }
  });

  bool start_ok = true, mono_ok = true, unit_ok = true;
  for (int t = 0; t < trials; ++t) {
    if (start_vals[static_cast<size_t>(t)] != 2) start_ok = false;
    if (!mono[static_cast<size_t>(t)]) mono_ok = false;
    if (!unit[static_cast<size_t>(t)]) unit_ok = false;
  }
  col.property("staircase starts at floor(L/2) = 2", start_ok,
               start_ok ? 0.0 : -1.0);
  col.property("staircase is non-increasing", mono_ok, mono_ok ? 0.0 : -1.0);
  col.property("every detected drop is exactly 1", unit_ok,
               unit_ok ? 0.0 : -1.0);
  return col.finish();
}

// ---------------------------------------------------------------------------
// 9. Unit-norm columns with spark >= 3 give gamma(l1, A, 1) < 1.
// ---------------------------------------------------------------------------
VerificationReport criterion_remark3(const SuiteConfig& cfg) {
  const int trials = cfg.trials > 0 ? cfg.trials : 50;
  Collector col("remark3-unit-columns", trials);

  double worst = -kInf;
  bool all_exact = true;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
    const SensingMatrix a = gaussian(4, 8, seed, true);
    const NscContext ctx(a);
    const NscEstimate est = nsc_estimate(ctx, NscQuery{1.0, 1});
    col.count(est.status);
    if (est.status != NscStatus::Exact) all_exact = false;
    worst = std::max(worst, est.value);
  }
  col.property("gamma(l1, A, 1) < 1 on all normalized draws", worst < 1.0,
               1.0 - worst);
  col.property("all evaluations exact", all_exact, all_exact ? 0.0 : -1.0);
  return col.finish();
}

// ---------------------------------------------------------------------------
// 10. Exact l1 enumeration vs the forced sampling estimator.
// ---------------------------------------------------------------------------
VerificationReport criterion_l1_oracle(const SuiteConfig& cfg) {
  const int trials = cfg.trials > 0 ? cfg.trials : 50;
  Collector col("l1-exact-vs-estimator", trials);

  std::vector<double> diffs(static_cast<size_t>(trials), 0.0);
  std::vector<double> overshoot(static_cast<size_t>(trials), 0.0);

  parallel_for(trials, cfg.jobs, [&](int t) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
    const SensingMatrix a = gaussian(4, 6, seed);
    const NscContext ctx(a);
    for (int k = 1; k <= 2; ++k) {
      const NscEstimate exact = nsc_estimate(ctx, NscQuery{1.0, k});
      col.count(exact.status);
      EstimatorConfig forced;
      forced.force_general = true;
      forced.seed = seed;
      const NscEstimate est = nsc_estimate(ctx, NscQuery{1.0, k}, forced);
      col.count(est.status);
      diffs[static_cast<size_t>(t)] =
          std::max(diffs[static_cast<size_t>(t)], std::abs(exact.value - est.value));
      overshoot[static_cast<size_t>(t)] =
          std::max(overshoot[static_cast<size_t>(t)], est.value - exact.value);
    }
  });

  double worst_diff = 0.0, worst_over = 0.0;
  for (int t = 0; t < trials; ++t) {
    worst_diff = std::max(worst_diff, diffs[static_cast<size_t>(t)]);
    worst_over = std::max(worst_over, overshoot[static_cast<size_t>(t)]);
  }
  col.property("estimator matches exact l1 value within 1e-6",
               worst_diff <= 1e-6, 1e-6 - worst_diff);
  col.property("estimator never exceeds the exact value",
               worst_over <= 1e-12, 1e-12 - worst_over);
  return col.finish();
}

}  // namespace

int criterion_count() { return 10; }

VerificationReport run_criterion(int index, const SuiteConfig& cfg) {
  switch (index) {
    case 1: return criterion_l0_closed_form(cfg);
    case 2: return criterion_d1_oracle(cfg);
    case 3: return criterion_counterexample(cfg);
    case 4: return criterion_thm1(cfg);
    case 5: return criterion_thm2(cfg);
    case 6: return criterion_thm3(cfg);
    case 7: return criterion_recovery(cfg);
    case 8: return criterion_staircase(cfg);
    case 9: return criterion_remark3(cfg);
    case 10: return criterion_l1_oracle(cfg);
  }
  raise(ErrorCode::InvalidArgument, "unknown criterion index");
}

std::string criterion_label(int index) {
  switch (index) {
    case 1: return "l0 closed form and finiteness";
    case 2: return "nullity-1 oracle equivalence";
    case 3: return "counterexample fixture";
    case 4: return "strict increase in k";
    case 5: return "continuity surrogate in p";
    case 6: return "strict increase in p (random draws)";
    case 7: return "recovery equivalence at desk scale";
    case 8: return "staircase structure";
    case 9: return "unit-column bound gamma(l1,A,1) < 1";
    case 10: return "exact l1 vs estimator";
  }
  return "unknown";
}

std::vector<std::string> suite_names() {
  return {"thm1", "thm2", "thm3", "counterexample", "recovery", "remark3"};
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "thm1") return criterion_thm1(cfg);
  if (name == "thm2") return criterion_thm2(cfg);
  if (name == "thm3") return criterion_thm3(cfg);
  if (name == "counterexample") return criterion_counterexample(cfg);
  if (name == "recovery") return criterion_recovery(cfg);
  if (name == "remark3") return criterion_remark3(cfg);
  raise(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace nsclab
