#include "nsclab/derived.hpp"

#include "nsclab/parallel.hpp"
#include "nsclab/rng.hpp"

#include <algorithm>
#include <cmath>

namespace nsclab {

namespace {

constexpr std::uint64_t kTagSweepRow = 17;
constexpr std::uint64_t kTagSweepPoint = 18;
constexpr std::uint64_t kTagBisect = 19;

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) raise(ErrorCode::InvalidArgument, "p grid must be nonempty");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] > 1.0)
      raise(ErrorCode::InvalidArgument, "p grid values must lie in [0, 1]");
    if (i > 0 && grid[i] <= grid[i - 1])
      raise(ErrorCode::InvalidArgument, "p grid must be strictly increasing");
  }
}

// Re-evaluates an earlier certificate at the current query; replaces a
// sampling-path estimate when the certificate scores higher. Exact values
// are already suprema and are left alone.
void close_under(NscEstimate& est, const NscQuery& q, const Certificate& prev) {
  if (est.status != NscStatus::LowerBound) return;
  const double v = theta_top_k(q.p, prev.z, q.k, q.zero_tol);
  if (v > est.value) {
    est.value = v;
    est.certificate = Certificate{prev.z, top_k_support(prev.z, q.k), v};
  }
}

}  // namespace

const char* to_string(PStarKind kind) {
  switch (kind) {
    case PStarKind::Empty: return "Empty";
    case PStarKind::Interior: return "Interior";
    case PStarKind::FullRange: return "FullRange";
  }
  return "Unknown";
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 1 || hi < lo)
    raise(ErrorCode::InvalidArgument, "uniform_grid: bad range");
  std::vector<double> grid(static_cast<size_t>(count));
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < count; ++i)
    grid[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return grid;
}

std::vector<NscEstimate> gamma_sweep(const NscContext& ctx,
                                     const std::vector<double>& ps, int k,
                                     const EstimatorConfig& config) {
  check_grid(ps);
  std::vector<NscEstimate> out;
  out.reserve(ps.size());
  std::optional<Certificate> prev;
  for (size_t j = 0; j < ps.size(); ++j) {
    NscQuery q{ps[j], k, config.zero_tol};
    EstimatorConfig cfg = config;
    cfg.seed = SplitStream::derive(config.seed, kTagSweepPoint,
                                   static_cast<std::uint64_t>(j))
                   .next_u64();
    if (prev) cfg.warm_starts.push_back(prev->z);
    NscEstimate est = nsc_estimate(ctx, q, cfg);
    if (prev) close_under(est, q, *prev);
    if (est.certificate) prev = est.certificate;
    out.push_back(std::move(est));
  }
  return out;
}

KStarResult k_star(const NscContext& ctx, double p, double margin,
                   const EstimatorConfig& config) {
  if (p < 0.0 || p > 1.0)
    raise(ErrorCode::InvalidArgument, "k_star: p must lie in [0, 1]");
  if (margin < 0.0)
    raise(ErrorCode::InvalidArgument, "k_star: margin must be nonnegative");

  KStarResult out;
  std::optional<Certificate> prev;
  const Index n = ctx.matrix().cols();
  for (int k = 1; k <= n; ++k) {
    EstimatorConfig cfg = config;
    cfg.seed = SplitStream::derive(config.seed, kTagSweepRow,
                                   static_cast<std::uint64_t>(k))
                   .next_u64();
    if (prev) cfg.warm_starts.push_back(prev->z);
    NscQuery q{p, k, config.zero_tol};
    NscEstimate est = nsc_estimate(ctx, q, cfg);
    if (prev) close_under(est, q, *prev);
    if (est.status == NscStatus::LowerBound) {
      out.all_exact = false;
      ++out.lower_bound_evals;
    }
    if (est.status != NscStatus::Infinite && est.value < 1.0 - margin) {
      out.value = k;
      if (est.certificate) prev = est.certificate;
      continue;
    }
    break;
  }
  return out;
}

ReconstructionExponent p_star(const NscContext& ctx, int k, double tol_p,
                              const EstimatorConfig& config) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "p_star: k must be positive");
  if (tol_p <= 0.0)
    raise(ErrorCode::InvalidArgument, "p_star: tol_p must be positive");

  ReconstructionExponent out;
  out.k = k;

  bool downgraded = false;
  std::vector<Vec> pool;
  const auto gamma_at = [&](double p, int point) {
    EstimatorConfig cfg = config;
    cfg.seed = SplitStream::derive(config.seed, kTagBisect,
                                   static_cast<std::uint64_t>(point))
                   .next_u64();
    cfg.warm_starts.insert(cfg.warm_starts.end(), pool.begin(), pool.end());
    NscEstimate est = nsc_estimate(ctx, NscQuery{p, k, config.zero_tol}, cfg);
    if (est.status == NscStatus::LowerBound) downgraded = true;
    if (est.certificate) {
      pool.push_back(est.certificate->z);
      if (pool.size() > 4) pool.erase(pool.begin());
    }
    return est.value;
  };

  const double gamma0 = gamma_at(0.0, 0);
  if (gamma0 >= 1.0) {
    out.kind = PStarKind::Empty;
    out.status_downgrade = downgraded;
    return out;
  }
  // A band of a few ulps keeps the exactly-critical case gamma(1) = 1 from
  // flipping to FullRange on rounding; it lands on Interior with the
  // bracket pinned at 1 instead.
  const double gamma1 = gamma_at(1.0, 1);
  if (gamma1 < 1.0 - 1e-12) {
    out.kind = PStarKind::FullRange;
    out.lo = 0.0;
    out.hi = 1.0;
    out.p_star = 1.0;
    out.status_downgrade = downgraded;
    return out;
  }

  double lo = 0.0, hi = 1.0;
  int point = 2;
  while (hi - lo > tol_p) {
    const double mid = 0.5 * (lo + hi);
    if (gamma_at(mid, point++) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.kind = PStarKind::Interior;
  out.lo = lo;
  out.hi = hi;
  out.p_star = hi;
  out.status_downgrade = downgraded;
  return out;
}

StaircaseCurve staircase(const NscContext& ctx, const std::vector<double>& grid,
                         double margin, const EstimatorConfig& config,
                         int jobs) {
  check_grid(grid);
  StaircaseCurve out;
  out.grid = grid;
  out.values.assign(grid.size(), 0);

  // Rows above k*(p_min) stay at or above one for every p, so only the
  // leading rows are ever needed.
  EstimatorConfig head = config;
  head.seed = SplitStream::derive(config.seed, kTagSweepRow, 0).next_u64();
  const KStarResult k0 = k_star(ctx, grid.front(), margin, head);
  if (!k0.all_exact) out.all_exact = false;
  if (k0.value == 0) return out;

  std::vector<std::vector<NscEstimate>> rows(static_cast<size_t>(k0.value));
  parallel_for(k0.value, jobs, [&](int idx) {
    EstimatorConfig cfg = config;
    cfg.seed = SplitStream::derive(config.seed, kTagSweepRow,
                                   static_cast<std::uint64_t>(idx + 1))
                   .next_u64();
    rows[static_cast<size_t>(idx)] = gamma_sweep(ctx, grid, idx + 1, cfg);
  });

  for (size_t j = 0; j < grid.size(); ++j) {
    int value = 0;
    for (int k = 1; k <= k0.value; ++k) {
      const NscEstimate& est = rows[static_cast<size_t>(k - 1)][j];
      if (est.status == NscStatus::LowerBound) out.all_exact = false;
      if (est.status != NscStatus::Infinite && est.value < 1.0 - margin) {
        value = k;
      } else {
        break;
      }
    }
    out.values[j] = value;
  }

  for (size_t j = 0; j + 1 < grid.size(); ++j) {
    if (out.values[j + 1] < out.values[j]) {
      out.jumps.push_back(StaircaseJump{grid[j], grid[j + 1], out.values[j],
                                        out.values[j + 1]});
    }
  }
  return out;
}

GammaTable gamma_curves(const NscContext& ctx, const std::vector<double>& ps,
                        const std::vector<int>& ks,
                        const EstimatorConfig& config, int jobs) {
  check_grid(ps);
  if (ks.empty()) raise(ErrorCode::InvalidArgument, "gamma_curves: empty k range");
  for (int k : ks)
    if (k < 1) raise(ErrorCode::InvalidArgument, "gamma_curves: k must be positive");

  GammaTable table;
  table.ps = ps;
  table.ks = ks;
  table.rows.resize(ks.size());

  parallel_for(static_cast<int>(ks.size()), jobs, [&](int idx) {
    EstimatorConfig cfg = config;
    cfg.seed = SplitStream::derive(config.seed, kTagSweepRow,
                                   static_cast<std::uint64_t>(ks[static_cast<size_t>(idx)]))
                   .next_u64();
    const auto sweep = gamma_sweep(ctx, ps, ks[static_cast<size_t>(idx)], cfg);
    auto& row = table.rows[static_cast<size_t>(idx)];
    row.reserve(sweep.size());
    for (const auto& est : sweep) row.push_back(GammaCell{est.value, est.status});
  });
  return table;
}

}  // namespace nsclab
