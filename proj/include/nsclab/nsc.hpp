#pragma once

#include "nsclab/linalg.hpp"
#include "nsclab/spark.hpp"
#include "nsclab/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nsclab {

struct NscQuery {
  double p = 1.0;
  int k = 1;
  double zero_tol = 1e-9;  // relative threshold for "nonzero" at p = 0
};

enum class NscStatus { Exact, LowerBound, Infinite };
const char* to_string(NscStatus status);

/// An attaining pair: unit null vector z and support S with the ratio they
/// achieve. Doubles as raw material for recovery failure witnesses.
struct Certificate {
  Vec z;
  SupportSet support;
  double theta_value = 0.0;
};

struct NscDiagnostics {
  long iterations = 0;
  int restarts = 0;
  int grid_points = 0;
};

struct NscEstimate {
  NscQuery query;
  double value = 0.0;  // +infinity when status == Infinite
  NscStatus status = NscStatus::Exact;
  std::optional<Certificate> certificate;
  std::string method;
  NscDiagnostics diagnostics;
};

struct EstimatorConfig {
  int restarts = 64;
  int grid_points = 720;  // angles per half circle on the nullity-2 path
  double eps_start = 1.0;
  double eps_floor = 1e-9;
  int max_stage_iters = 200;
  std::uint64_t seed = 0;
  bool exhaustive_supports = false;
  bool force_general = false;  // bypass closed-form routing (cross-checks)
  int max_enum_cols = 12;
  int max_enum_nullity = 4;
  int stratum_cap = 20000;  // cusp-stratum enumeration budget
  double rank_tol = 0.0;    // 0 selects default_rank_tol
  double zero_tol = 1e-9;
  std::vector<Vec> warm_starts;  // null vectors seeding the search
};

/// The ratio (sum_{i in S} |z_i|^p) / (sum_{i not in S} |z_i|^p), with the
/// p = 0 convention that an entry counts as nonzero when |z_i| exceeds
/// zero_tol * max|z|. A zero denominator yields +infinity (or 0 when the
/// numerator is also 0).
double theta(double p, const Vec& z, const SupportSet& s,
             double zero_tol = 1e-9);

/// Indices of the k largest magnitudes, ties broken by smallest index.
SupportSet top_k_support(const Vec& z, int k);

/// theta at the best support of size k, without materializing the set.
double theta_top_k(double p, const Vec& z, int k, double zero_tol = 1e-9);

/// Per-matrix state shared across repeated queries.
class NscContext {
 public:
  explicit NscContext(SensingMatrix a, double rank_tol = 0.0);

  const SensingMatrix& matrix() const { return a_; }
  const NullSpaceBasis& basis() const { return basis_; }
  const SparkResult& spark() const { return spark_; }
  double rank_tol() const { return rank_tol_; }

 private:
  SensingMatrix a_;
  double rank_tol_;
  NullSpaceBasis basis_;
  SparkResult spark_;
};

/// Closed form at p = 0: k / (L+1-k) for k <= L, infinite beyond, with a
/// certificate assembled from the spark witness.
NscEstimate nsc_l0(const SparkResult& spark, int k);

/// Exact constant for a one-dimensional null space, any p.
NscEstimate nsc_exact_d1(const NullSpaceBasis& basis, double p, int k,
                         double zero_tol = 1e-9);

/// Exact constant at p = 1 by enumerating supports and sign orthants; each
/// orthant is a small linear program in the null-space coefficients.
NscEstimate nsc_exact_l1_enum(const NullSpaceBasis& basis, int k,
                              int max_cols = 12, int max_nullity = 4);

/// Main entry point: routes to exact paths when available, otherwise runs
/// the sampling estimator whose value is a certified lower bound.
NscEstimate nsc_estimate(const NscContext& ctx, const NscQuery& query,
                         const EstimatorConfig& config = {});
NscEstimate nsc_estimate(const SensingMatrix& a, const NscQuery& query,
                         const EstimatorConfig& config = {});

}  // namespace nsclab
