#include "nsclab/nsc.hpp"

#include "nsclab/combin.hpp"
#include "nsclab/lp.hpp"
#include "nsclab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace nsclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_query(const NscQuery& q) {
  if (q.p < 0.0 || q.p > 1.0)
    raise(ErrorCode::InvalidArgument, "nsc: p must lie in [0, 1]");
  if (q.k < 1) raise(ErrorCode::InvalidArgument, "nsc: k must be positive");
  if (q.zero_tol < 0.0)
    raise(ErrorCode::InvalidArgument, "nsc: zero_tol must be nonnegative");
}

void check_config(const EstimatorConfig& c) {
  if (c.restarts < 1 || c.grid_points < 8 || c.max_stage_iters < 1 ||
      c.eps_start <= 0.0 || c.eps_floor <= 0.0 || c.eps_floor > c.eps_start)
    raise(ErrorCode::InvalidArgument, "nsc: estimator config must be positive");
}

}  // namespace

const char* to_string(NscStatus status) {
  switch (status) {
    case NscStatus::Exact: return "Exact";
    case NscStatus::LowerBound: return "LowerBound";
    case NscStatus::Infinite: return "Infinite";
  }
  return "Unknown";
}

double theta(double p, const Vec& z, const SupportSet& s, double zero_tol) {
  if (p < 0.0 || p > 1.0)
    raise(ErrorCode::InvalidArgument, "theta: p must lie in [0, 1]");
  if (z.size() == 0) raise(ErrorCode::ZeroVector, "theta: empty vector");
  const double zmax = z.cwiseAbs().maxCoeff();
  if (zmax <= zero_tol) raise(ErrorCode::ZeroVector, "theta: zero vector");

  double num = 0.0, den = 0.0;
  if (p == 0.0) {
    const double threshold = zero_tol * zmax;
    for (Index i = 0; i < z.size(); ++i) {
      if (std::abs(z(i)) > threshold) (s.contains(i) ? num : den) += 1.0;
    }
  } else {
    for (Index i = 0; i < z.size(); ++i) {
      const double a = std::pow(std::abs(z(i)), p);
      (s.contains(i) ? num : den) += a;
    }
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
  return num / den;
}

SupportSet top_k_support(const Vec& z, int k) {
  const Index n = z.size();
  if (k < 1 || k > n)
    raise(ErrorCode::InvalidArgument, "top_k_support: k out of range");
  std::vector<Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::abs(z(a)) > std::abs(z(b));
  });
  order.resize(static_cast<size_t>(k));
  return SupportSet(std::move(order));
}

double theta_top_k(double p, const Vec& z, int k, double zero_tol) {
  const Index n = z.size();
  if (k < 1 || k > n)
    raise(ErrorCode::InvalidArgument, "theta_top_k: k out of range");
  const double zmax = z.cwiseAbs().maxCoeff();
  if (zmax <= zero_tol) raise(ErrorCode::ZeroVector, "theta_top_k: zero vector");

  if (p == 0.0) {
    const double threshold = zero_tol * zmax;
    int nnz = 0;
    for (Index i = 0; i < n; ++i)
      if (std::abs(z(i)) > threshold) ++nnz;
    const int num = std::min(k, nnz);
    const int den = nnz - num;
    if (den == 0) return num == 0 ? 0.0 : kInf;
    return double(num) / double(den);
  }

  // Powers preserve the magnitude ordering, so the k largest powers sum to
  // the numerator.
  std::vector<double> powers(static_cast<size_t>(n));
  double total = 0.0;
  for (Index i = 0; i < n; ++i) {
    powers[static_cast<size_t>(i)] = std::pow(std::abs(z(i)), p);
    total += powers[static_cast<size_t>(i)];
  }
  std::nth_element(powers.begin(), powers.begin() + (k - 1), powers.end(),
                   std::greater<double>());
  double num = 0.0;
  for (int i = 0; i < k; ++i) num += powers[static_cast<size_t>(i)];
  const double den = total - num;
  if (den <= 0.0) return num == 0.0 ? 0.0 : kInf;
  return num / den;
}

NscContext::NscContext(SensingMatrix a, double rank_tol)
    : a_(std::move(a)),
      rank_tol_(rank_tol),
      basis_(null_space_basis(a_, rank_tol)),
      spark_(compute_spark(a_, rank_tol)) {}

NscEstimate nsc_l0(const SparkResult& spark, int k) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "nsc_l0: k must be positive");
  NscEstimate est;
  est.query.p = 0.0;
  est.query.k = k;
  if (spark.no_dependent_subset) {
    est.value = 0.0;
    est.status = NscStatus::Exact;
    est.method = "trivial_nullspace";
    return est;
  }
  if (k >= spark.spark) {
    est.value = kInf;
    est.status = NscStatus::Infinite;
    est.method = "l0_closed_form";
    return est;
  }
  est.value = double(k) / double(spark.L + 1 - k);
  est.status = NscStatus::Exact;
  est.method = "l0_closed_form";

  // The (L+1)-sparse null vector solved from the witness columns attains the
  // ratio for any k of its support indices.
  Vec z = Vec::Zero(spark.cols);
  for (size_t j = 0; j < spark.witness.size(); ++j)
    z(spark.witness[j]) = spark.witness_coeffs(static_cast<Index>(j));
  z /= z.norm();
  std::vector<Index> inside(spark.witness.begin(), spark.witness.begin() + k);
  est.certificate = Certificate{std::move(z), SupportSet(std::move(inside)),
                                est.value};
  return est;
}

NscEstimate nsc_exact_d1(const NullSpaceBasis& basis, double p, int k,
                         double zero_tol) {
  if (basis.dimension() != 1)
    raise(ErrorCode::WrongDimension, "nsc_exact_d1: nullity must be 1");
  if (p < 0.0 || p > 1.0)
    raise(ErrorCode::InvalidArgument, "nsc_exact_d1: p must lie in [0, 1]");
  if (k < 1) raise(ErrorCode::InvalidArgument, "nsc_exact_d1: k must be positive");

  NscEstimate est;
  est.query.p = p;
  est.query.k = k;
  est.query.zero_tol = zero_tol;
  est.method = "d1_closed_form";

  const Index n = basis.parent_cols;
  const Vec z = basis.basis.col(0);
  const double value =
      k >= n ? kInf : theta_top_k(p, z, k, zero_tol);
  if (std::isinf(value)) {
    est.value = kInf;
    est.status = NscStatus::Infinite;
    return est;
  }
  est.value = value;
  est.status = NscStatus::Exact;
  est.certificate = Certificate{z, top_k_support(z, k), value};
  return est;
}

NscEstimate nsc_exact_l1_enum(const NullSpaceBasis& basis, int k, int max_cols,
                              int max_nullity) {
  const Index n = basis.parent_cols;
  const Index d = basis.dimension();

  NscEstimate est;
  est.query.p = 1.0;
  est.query.k = k;
  est.method = "l1_orthant_lp";

  if (d == 0) {
    est.value = 0.0;
    est.status = NscStatus::Exact;
    est.method = "trivial_nullspace";
    return est;
  }
  if (n > max_cols || d > max_nullity)
    raise(ErrorCode::TooLarge, "nsc_exact_l1_enum: beyond enumeration limits");
  if (k < 1 || k >= n)
    raise(ErrorCode::InvalidArgument, "nsc_exact_l1_enum: k out of range");

  const Mat& b = basis.basis;
  const Index nvars = 2 * d + n;

  double best = -1.0;
  Vec best_w;
  std::vector<Index> best_support;
  long lp_count = 0;

  std::vector<bool> in_s(static_cast<size_t>(n));
  std::vector<Index> combo = first_combination(k);
  do {
    std::fill(in_s.begin(), in_s.end(), false);
    for (Index idx : combo) in_s[static_cast<size_t>(idx)] = true;

    // Antipodal symmetry: fix the sign of coordinate 0.
    const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      LpProblem lp;
      lp.a = Mat::Zero(n + 1, nvars);
      lp.b = Vec::Zero(n + 1);
      lp.c = Vec::Zero(nvars);
      for (Index i = 0; i < n; ++i) {
        const double sigma =
            (i == 0) ? 1.0 : ((mask >> (i - 1)) & 1 ? -1.0 : 1.0);
        for (Index j = 0; j < d; ++j) {
          lp.a(i, j) = sigma * b(i, j);
          lp.a(i, d + j) = -sigma * b(i, j);
        }
        lp.a(i, 2 * d + i) = -1.0;
        if (in_s[static_cast<size_t>(i)]) {
          lp.c(2 * d + i) = 1.0;
        } else {
          lp.a(n, 2 * d + i) = 1.0;
        }
      }
      lp.b(n) = 1.0;

      const LpSolution sol = solve_lp(lp);
      ++lp_count;
      if (sol.status == LpStatus::Unbounded)
        raise(ErrorCode::NumericalInconsistency,
              "nsc_exact_l1_enum: unbounded orthant implies k >= spark");
      if (sol.status != LpStatus::Optimal) continue;
      if (sol.value > best) {
        best = sol.value;
        best_w = sol.x.head(d) - sol.x.segment(d, d);
        best_support = combo;
      }
    }
  } while (next_combination(combo, n));

  if (best < 0.0)
    raise(ErrorCode::NumericalInconsistency,
          "nsc_exact_l1_enum: no feasible orthant found");

  Vec z;
  if (best_w.norm() < 1e-12) {
    z = b.col(0);  // optimum 0: any unit null vector attains it
  } else {
    z = b * best_w;
    z /= z.norm();
  }
  SupportSet support(std::move(best_support));
  const double value = theta(1.0, z, support);
  est.value = value;
  est.status = NscStatus::Exact;
  est.certificate = Certificate{std::move(z), std::move(support), value};
  est.diagnostics.iterations = lp_count;
  return est;
}

namespace {

// ---------------------------------------------------------------------------
// Nullity-2 path: dense angular grid over the unit half-circle in coefficient
// space, followed by local refinement of the best cells.
// ---------------------------------------------------------------------------

struct RefineOutcome {
  double phi = 0.0;
  double value = -kInf;
  bool converged = false;
};

template <typename F>
RefineOutcome refine_bracket(const F& eval, double lo, double hi) {
  // A few sub-grid rounds localize the maximum even when the bracket holds
  // more than one hump, then golden-section polishes it.
  constexpr int kSubPoints = 33;
  for (int round = 0; round < 4; ++round) {
    double best_v = -kInf;
    int best_i = 0;
    const double step = (hi - lo) / (kSubPoints - 1);
    for (int i = 0; i < kSubPoints; ++i) {
      const double v = eval(lo + step * i);
      if (v > best_v) {
        best_v = v;
        best_i = i;
      }
    }
    const double center = lo + step * best_i;
    lo = center - step;
    hi = center + step;
  }

  constexpr double kGolden = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = eval(c), fd = eval(d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = eval(d);
    }
  }
  RefineOutcome out;
  out.converged = std::abs(fc - fd) <= 1e-8;
  if (fc > fd) {
    out.phi = c;
    out.value = fc;
  } else {
    out.phi = d;
    out.value = fd;
  }
  return out;
}

NscEstimate d2_grid_estimate(const NullSpaceBasis& basis, const NscQuery& q,
                             const EstimatorConfig& cfg) {
  const Mat& b = basis.basis;  // N x 2
  const int grid = cfg.grid_points;
  const double pi = std::acos(-1.0);

  const auto point = [&](double phi) -> Vec {
    return b.col(0) * std::cos(phi) + b.col(1) * std::sin(phi);
  };
  const auto eval = [&](double phi) {
    return theta_top_k(q.p, point(phi), q.k, q.zero_tol);
  };

  std::vector<double> values(static_cast<size_t>(grid));
  for (int j = 0; j < grid; ++j) values[static_cast<size_t>(j)] = eval(pi * j / grid);

  // Candidate centers: the best grid cells that are local maxima on the
  // (antipodally wrapped) circle, plus any warm starts.
  std::vector<int> maxima;
  for (int j = 0; j < grid; ++j) {
    const double v = values[static_cast<size_t>(j)];
    const double prev = values[static_cast<size_t>((j + grid - 1) % grid)];
    const double next = values[static_cast<size_t>((j + 1) % grid)];
    if (v >= prev && v >= next) maxima.push_back(j);
  }
  std::sort(maxima.begin(), maxima.end(), [&](int a, int bb) {
    return values[static_cast<size_t>(a)] > values[static_cast<size_t>(bb)];
  });
  if (maxima.size() > 8) maxima.resize(8);

  std::vector<double> centers;
  for (int j : maxima) centers.push_back(pi * j / grid);
  for (const Vec& z : cfg.warm_starts) {
    if (z.size() != b.rows()) continue;
    const Eigen::Vector2d w = b.transpose() * z;
    if (w.norm() < 1e-12) continue;
    double phi = std::atan2(w(1), w(0));
    if (phi < 0.0) phi += pi;
    if (phi >= pi) phi -= pi;
    centers.push_back(phi);
  }

  const double cell = pi / grid;
  double best_phi = 0.0, best_value = -kInf;
  bool best_converged = false;
  for (double center : centers) {
    const RefineOutcome out = refine_bracket(eval, center - cell, center + cell);
    if (out.value > best_value) {
      best_value = out.value;
      best_phi = out.phi;
      best_converged = out.converged;
    }
  }
  Vec best_z = point(best_phi);

  // Coordinate zeros are upward cusps of theta for p < 1 (the denominator
  // loses a term), and the maximizer frequently sits exactly there. Their
  // angles are closed-form, so evaluate each cusp with the vanishing
  // coordinate zeroed out; this is exact where golden-section cannot
  // certify convergence against an infinite slope.
  for (Index j = 0; j < b.rows(); ++j) {
    if (b(j, 0) == 0.0 && b(j, 1) == 0.0) continue;
    const double phi = std::atan2(-b(j, 0), b(j, 1));
    Vec z = point(phi);
    z(j) = 0.0;
    const double v = theta_top_k(q.p, z, q.k, q.zero_tol);
    if (v > best_value) {
      best_value = v;
      best_z = z;
      best_converged = true;
    }
  }

  Vec z = best_z;
  SupportSet support = top_k_support(z, q.k);
  const double value = theta(q.p, z, support, q.zero_tol);

  NscEstimate est;
  est.query = q;
  est.value = value;
  est.status = best_converged ? NscStatus::Exact : NscStatus::LowerBound;
  est.certificate = Certificate{std::move(z), std::move(support), value};
  est.method = "d2_grid";
  est.diagnostics.grid_points = grid;
  return est;
}

// ---------------------------------------------------------------------------
// General path: multistart projected-gradient ascent on the unit sphere in
// coefficient space, maximizing the eps-smoothed ratio with continuation.
// ---------------------------------------------------------------------------

class SphereAscent {
 public:
  SphereAscent(const Mat& b, const NscQuery& q, const EstimatorConfig& cfg)
      : b_(b),
        q_(q),
        cfg_(cfg),
        n_(b.rows()),
        k_(q.k),
        z_(n_),
        dfdz_(n_),
        grad_(b.cols()),
        tangent_(b.cols()),
        trial_(b.cols()),
        powers_(static_cast<size_t>(n_)),
        scratch_(static_cast<size_t>(n_)),
        mask_(static_cast<size_t>(n_)) {}

  // S selection: fixed support when provided, otherwise the running top-k
  // (smoothed magnitudes are ordered like |z|, so they share a top-k).
  double smoothed_value(const Vec& w, double eps, const std::vector<char>* fixed_s) {
    z_.noalias() = b_ * w;
    const double half_p = q_.p / 2.0;
    double num = 0.0, total = 0.0;
    if (fixed_s == nullptr) {
      for (Index i = 0; i < n_; ++i) {
        const double mi = std::pow(z_(i) * z_(i) + eps * eps, half_p);
        powers_[static_cast<size_t>(i)] = mi;
        total += mi;
      }
      scratch_ = powers_;
      std::nth_element(scratch_.begin(), scratch_.begin() + (k_ - 1),
                       scratch_.end(), std::greater<double>());
      for (int i = 0; i < k_; ++i) num += scratch_[static_cast<size_t>(i)];
    } else {
      for (Index i = 0; i < n_; ++i) {
        const double mi = std::pow(z_(i) * z_(i) + eps * eps, half_p);
        total += mi;
        if ((*fixed_s)[static_cast<size_t>(i)]) num += mi;
      }
    }
    const double den = total - num;
    return den > 0.0 ? num / den : 0.0;
  }

  // f and its Riemannian gradient at w; writes the tangent into tangent_.
  double smoothed_grad(const Vec& w, double eps, const std::vector<char>* fixed_s) {
    z_.noalias() = b_ * w;
    const std::vector<char>* s = fixed_s;
    if (s == nullptr) {
      fill_top_k_mask();
      s = &mask_;
    }
    const double half_p = q_.p / 2.0;
    double num = 0.0, den = 0.0;
    for (Index i = 0; i < n_; ++i) {
      const double base = z_(i) * z_(i) + eps * eps;
      const double mi = std::pow(base, half_p);
      dfdz_(i) = q_.p * z_(i) * mi / base;
      ((*s)[static_cast<size_t>(i)] ? num : den) += mi;
    }
    if (den <= 0.0) {
      tangent_.setZero();
      return 0.0;
    }
    const double f = num / den;
    for (Index i = 0; i < n_; ++i) {
      dfdz_(i) = (*s)[static_cast<size_t>(i)] ? dfdz_(i) / den
                                              : -dfdz_(i) * f / den;
    }
    grad_.noalias() = b_.transpose() * dfdz_;
    tangent_.noalias() = grad_ - w.dot(grad_) * w;
    return f;
  }

  // Returns the final iterate; accumulates inner iterations into *iters.
  Vec ascend(Vec w, const std::vector<char>* fixed_s, long* iters) {
    for (double eps = cfg_.eps_start;; eps /= 10.0) {
      double alpha = 1.0;
      for (int it = 0; it < cfg_.max_stage_iters; ++it) {
        const double f = smoothed_grad(w, eps, fixed_s);
        const double tnorm = tangent_.norm();
        if (tnorm < 1e-14 || alpha * tnorm < 1e-12) break;

        bool improved = false;
        for (int halving = 0; halving < 25 && alpha * tnorm >= 1e-13; ++halving) {
          trial_.noalias() = w + alpha * tangent_;
          trial_.normalize();
          if (smoothed_value(trial_, eps, fixed_s) > f) {
            improved = true;
            break;
          }
          alpha *= 0.5;
        }
        if (!improved) break;
        const double moved = (trial_ - w).norm();
        w = trial_;
        ++(*iters);
        alpha = std::min(alpha * 2.0, 8.0);
        if (moved < 1e-12) break;
      }
      if (eps <= cfg_.eps_floor * (1.0 + 1e-12)) break;
    }
    return w;
  }

 private:
  void fill_top_k_mask() {
    for (Index i = 0; i < n_; ++i)
      scratch_[static_cast<size_t>(i)] = std::abs(z_(i));
    std::fill(mask_.begin(), mask_.end(), char{0});
    pivot_ = scratch_;
    std::nth_element(pivot_.begin(), pivot_.begin() + (k_ - 1), pivot_.end(),
                     std::greater<double>());
    const double kth = pivot_[static_cast<size_t>(k_ - 1)];
    int taken = 0;
    for (Index i = 0; i < n_ && taken < k_; ++i) {
      if (scratch_[static_cast<size_t>(i)] > kth) {
        mask_[static_cast<size_t>(i)] = 1;
        ++taken;
      }
    }
    for (Index i = 0; i < n_ && taken < k_; ++i) {
      if (!mask_[static_cast<size_t>(i)] &&
          scratch_[static_cast<size_t>(i)] == kth) {
        mask_[static_cast<size_t>(i)] = 1;
        ++taken;
      }
    }
  }

  const Mat& b_;
  NscQuery q_;
  EstimatorConfig cfg_;
  Index n_;
  int k_;
  Vec z_, dfdz_, grad_, tangent_, trial_;
  std::vector<double> powers_, scratch_, pivot_;
  std::vector<char> mask_;
};

NscEstimate multistart_estimate(const NullSpaceBasis& basis, const NscQuery& q,
                                const EstimatorConfig& cfg) {
  const Mat& b = basis.basis;
  const Index d = basis.dimension();
  const Index n = basis.parent_cols;
  SphereAscent ascent(b, q, cfg);

  double best = -kInf;
  Vec best_z;
  long iters = 0;

  const auto consider_z = [&](const Vec& z) {
    const double v = theta_top_k(q.p, z, q.k, q.zero_tol);
    if (v > best) {
      best = v;
      best_z = z;
    }
  };
  const auto consider = [&](const Vec& w) { consider_z(b * w); };

  // For p < 1 the ratio has upward cusps where coordinates vanish, and the
  // smoothed ascent stalls a smoothing-width away from them. Project the
  // iterate onto the null-space stratum that zeroes its smallest
  // coordinates and evaluate there exactly.
  const auto polish = [&](const Vec& w) {
    const Vec z = b * w;
    std::vector<Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index x, Index y) {
      return std::abs(z(x)) < std::abs(z(y));
    });
    for (Index r = 1; r < d; ++r) {
      Mat rows(r, d);
      for (Index i = 0; i < r; ++i) rows.row(i) = b.row(order[static_cast<size_t>(i)]);
      Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeFullV);
      Index rk = 0;
      const double smax = svd.singularValues()(0);
      for (Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-12 * smax) ++rk;
      const Index kd = d - rk;
      if (kd < 1) break;
      const Mat kernel = svd.matrixV().rightCols(kd);
      Vec w_proj = kernel * (kernel.transpose() * w);
      if (w_proj.norm() < 1e-10) continue;
      w_proj.normalize();
      Vec z_proj = b * w_proj;
      for (Index i = 0; i < r; ++i) z_proj(order[static_cast<size_t>(i)]) = 0.0;
      consider_z(z_proj);
    }
  };

  std::vector<Vec> starts;
  for (const Vec& z : cfg.warm_starts) {
    if (z.size() != n) continue;
    Vec w = b.transpose() * z;
    if (w.norm() < 1e-12) continue;
    starts.push_back(w.normalized());
  }
  for (int r = 0; r < cfg.restarts; ++r) {
    SplitStream stream = SplitStream::derive(cfg.seed, rng_tag::kRestart,
                                             static_cast<std::uint64_t>(r));
    Vec w(d);
    for (Index i = 0; i < d; ++i) w(i) = stream.next_gaussian();
    if (w.norm() < 1e-12) w.setOnes();
    starts.push_back(w.normalized());
  }

  std::vector<std::vector<Index>> supports;
  if (cfg.exhaustive_supports) {
    std::vector<Index> combo = first_combination(q.k);
    do {
      supports.push_back(combo);
    } while (next_combination(combo, n));
  }

  // The sparsest null directions (d-1 coordinates zeroed, one-dimensional
  // kernel) are the extreme cusp strata of the ratio and are frequently
  // where the supremum sits. They are finite, so evaluate them all exactly
  // whenever the count is affordable.
  if (d >= 2) {
    double stratum_count = 1.0;
    for (Index i = 0; i < d - 1; ++i)
      stratum_count *= double(n - i) / double(i + 1);
    if (stratum_count <= double(cfg.stratum_cap)) {
      std::vector<Index> zeros = first_combination(d - 1);
      do {
        Mat rows(d - 1, d);
        for (Index i = 0; i < d - 1; ++i)
          rows.row(i) = b.row(zeros[static_cast<size_t>(i)]);
        Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        Index rk = 0;
        for (Index i = 0; i < sv.size(); ++i)
          if (sv(i) > 1e-12 * sv(0)) ++rk;
        if (d - rk != 1) continue;  // degenerate stratum, left to the ascent
        Vec z = b * svd.matrixV().col(d - 1);
        const double norm = z.norm();
        if (norm < 1e-12) continue;
        z /= norm;
        for (Index i = 0; i < d - 1; ++i) z(zeros[static_cast<size_t>(i)]) = 0.0;
        consider_z(z);
      } while (next_combination(zeros, n));
    }
  }

  for (const Vec& w0 : starts) {
    consider(w0);
    if (cfg.exhaustive_supports) {
      for (const auto& support : supports) {
        std::vector<char> mask(static_cast<size_t>(n), 0);
        for (Index idx : support) mask[static_cast<size_t>(idx)] = 1;
        const Vec w = ascent.ascend(w0, &mask, &iters);
        consider(w);
        polish(w);
      }
    } else {
      const Vec w = ascent.ascend(w0, nullptr, &iters);
      consider(w);
      polish(w);
    }
  }

  Vec z = best_z / best_z.norm();
  SupportSet support = top_k_support(z, q.k);
  const double value = theta(q.p, z, support, q.zero_tol);

  NscEstimate est;
  est.query = q;
  est.value = value;
  est.status = NscStatus::LowerBound;
  est.certificate = Certificate{std::move(z), std::move(support), value};
  est.method = "multistart";
  est.diagnostics.restarts = cfg.restarts;
  est.diagnostics.iterations = iters;
  return est;
}

}  // namespace

NscEstimate nsc_estimate(const NscContext& ctx, const NscQuery& query,
                         const EstimatorConfig& config) {
  check_query(query);
  check_config(config);

  const NullSpaceBasis& basis = ctx.basis();
  const SparkResult& spark = ctx.spark();
  const Index n = ctx.matrix().cols();

  NscEstimate est;
  if (!spark.no_dependent_subset && query.k >= spark.spark) {
    est.query = query;
    est.value = kInf;
    est.status = NscStatus::Infinite;
    est.method = "spark_bound";
    return est;
  }
  if (basis.dimension() == 0) {
    est.query = query;
    est.value = 0.0;
    est.status = NscStatus::Exact;
    est.method = "trivial_nullspace";
    return est;
  }

  if (!config.force_general) {
    if (query.p == 0.0) {
      est = nsc_l0(spark, query.k);
      est.query = query;
      return est;
    }
    if (basis.dimension() == 1) {
      est = nsc_exact_d1(basis, query.p, query.k, query.zero_tol);
      est.query = query;
      return est;
    }
    if (query.p == 1.0 && n <= config.max_enum_cols &&
        basis.dimension() <= config.max_enum_nullity) {
      est = nsc_exact_l1_enum(basis, query.k, config.max_enum_cols,
                              config.max_enum_nullity);
      est.query = query;
      return est;
    }
    if (basis.dimension() == 2) return d2_grid_estimate(basis, query, config);
  }
  return multistart_estimate(basis, query, config);
}

NscEstimate nsc_estimate(const SensingMatrix& a, const NscQuery& query,
                         const EstimatorConfig& config) {
  return nsc_estimate(NscContext(a, config.rank_tol), query, config);
}

}  // namespace nsclab
