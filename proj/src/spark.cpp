#include "nsclab/spark.hpp"

#include "nsclab/combin.hpp"
#include "nsclab/linalg.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <string>

namespace nsclab {

namespace {

Vec kernel_vector(const Mat& sub) {
  // Smallest right singular vector of the dependent submatrix.
  Eigen::JacobiSVD<Mat> svd(sub, Eigen::ComputeFullV);
  Vec v = svd.matrixV().col(sub.cols() - 1);
  // Canonical sign, mirroring the null-space basis convention.
  const double vmax = v.cwiseAbs().maxCoeff();
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12 * vmax) {
      if (v(i) < 0.0) v = -v;
      break;
    }
  }
  return v;
}

}  // namespace

SparkResult compute_spark(const SensingMatrix& a, double rank_tol, int max_cols) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (n > max_cols)
    raise(ErrorCode::TooLarge, "compute_spark: " + std::to_string(n) +
                                   " columns exceeds max_cols " +
                                   std::to_string(max_cols));
  if (!a.entries.allFinite())
    raise(ErrorCode::InvalidMatrix, "compute_spark: non-finite entries");

  SparkResult out;
  out.cols = n;

  const Index s_max = std::min(m + 1, n);
  for (Index s = 1; s <= s_max; ++s) {
    std::vector<Index> combo = first_combination(s);
    do {
      Mat sub(m, s);
      for (Index j = 0; j < s; ++j) sub.col(j) = a.entries.col(combo[j]);
      if (rank_of(sub, rank_tol) < s) {
        out.spark = static_cast<int>(s);
        out.L = out.spark - 1;
        out.witness = combo;
        out.witness_coeffs = kernel_vector(sub);
        return out;
      }
    } while (next_combination(combo, n));
  }

  // No dependence up to min(M+1, N): only reachable for full column rank.
  out.spark = static_cast<int>(n) + 1;
  out.L = out.spark - 1;
  out.no_dependent_subset = true;
  return out;
}

}  // namespace nsclab
