#include "nsclab/linalg.hpp"

#include <Eigen/QR>

#include <cmath>

namespace nsclab {

namespace {

double effective_tol(const Eigen::Ref<const Mat>& m, double rank_tol) {
  return rank_tol > 0.0 ? rank_tol : default_rank_tol(m.rows(), m.cols());
}

Index pivot_rank(const Eigen::Ref<const Mat>& m, double rank_tol) {
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  const Mat& r = qr.matrixQR();
  const Index n = std::min(m.rows(), m.cols());
  const double largest = std::abs(r(0, 0));
  if (largest == 0.0) return 0;
  const double threshold = effective_tol(m, rank_tol) * largest;
  Index rk = 0;
  for (Index i = 0; i < n; ++i)
    if (std::abs(r(i, i)) > threshold) ++rk;
  return rk;
}

}  // namespace

Index rank_of(const Eigen::Ref<const Mat>& m, double rank_tol) {
  if (!m.allFinite())
    raise(ErrorCode::InvalidMatrix, "rank: non-finite entries");
  return pivot_rank(m, rank_tol);
}

Index rank(const SensingMatrix& a, double rank_tol) {
  return rank_of(a.entries, rank_tol);
}

NullSpaceBasis null_space_basis(const SensingMatrix& a, double rank_tol) {
  const Mat at = a.entries.transpose();
  Eigen::ColPivHouseholderQR<Mat> qr(at);
  const Index rk = pivot_rank(at, rank_tol);
  const Index n = a.cols();
  const Index d = n - rk;

  NullSpaceBasis out;
  out.parent_rows = a.rows();
  out.parent_cols = n;
  if (d == 0) {
    out.basis = Mat(n, 0);
    return out;
  }

  // The trailing columns of Q span the orthogonal complement of the row
  // space; a thin re-orthonormalization pass keeps the columns orthonormal
  // to working precision.
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  Mat kernel = q.rightCols(d);
  Eigen::HouseholderQR<Mat> reortho(kernel);
  Mat basis = reortho.householderQ() * Mat::Identity(n, d);

  // Canonical sign: first significant coordinate of each column positive.
  for (Index j = 0; j < d; ++j) {
    const double colmax = basis.col(j).cwiseAbs().maxCoeff();
    for (Index i = 0; i < n; ++i) {
      if (std::abs(basis(i, j)) > 1e-12 * colmax) {
        if (basis(i, j) < 0.0) basis.col(j) *= -1.0;
        break;
      }
    }
  }
  out.basis = std::move(basis);
  return out;
}

Vec weighted_min_norm_solve(const SensingMatrix& a, const Vec& y,
                            const Vec& weights) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (y.size() != m)
    raise(ErrorCode::WrongDimension, "weighted_min_norm_solve: y length");
  if (weights.size() != n)
    raise(ErrorCode::WrongDimension, "weighted_min_norm_solve: weights length");
  if ((weights.array() <= 0.0).any())
    raise(ErrorCode::InvalidArgument,
          "weighted_min_norm_solve: weights must be strictly positive");

  // x = D A^T (A D A^T)^{-1} y with D = diag(1/w). The normal matrix is
  // symmetric positive definite when A has full row rank.
  const Vec d = weights.cwiseInverse();
  const Mat adt = a.entries * d.asDiagonal() * a.entries.transpose();
  Eigen::LDLT<Mat> ldlt(adt);
  if (ldlt.info() != Eigen::Success)
    raise(ErrorCode::RankDeficient, "weighted_min_norm_solve: singular normal matrix");
  const Vec lambda = ldlt.solve(y);
  const Vec x = d.asDiagonal() * (a.entries.transpose() * lambda);

  const double residual = (a.entries * x - y).norm();
  if (residual > 1e-8 * (1.0 + y.norm()))
    raise(ErrorCode::RankDeficient,
          "weighted_min_norm_solve: residual too large; A is rank deficient "
          "within tolerance");
  return x;
}

}  // namespace nsclab
