#pragma once

#include "nsclab/types.hpp"

namespace nsclab {

/// Default rank tolerance knob: the dependence threshold is
/// default_rank_tol * (largest pivot magnitude).
inline double default_rank_tol(Index rows, Index cols) {
  return 1e-10 * static_cast<double>(std::max(rows, cols));
}

/// Numerical rank: the number of column-pivoted QR pivot magnitudes
/// exceeding rank_tol times the largest. rank_tol <= 0 selects the default.
Index rank(const SensingMatrix& a, double rank_tol = 0.0);

/// Same rank notion applied to a raw matrix block.
Index rank_of(const Eigen::Ref<const Mat>& m, double rank_tol);

/// Orthonormal basis of the null space of a, with a canonical sign
/// convention (first significant coordinate of each column positive) so the
/// result is reproducible for a fixed input.
NullSpaceBasis null_space_basis(const SensingMatrix& a, double rank_tol = 0.0);

/// Minimizer of sum_i weights_i * x_i^2 subject to a*x = y. Requires
/// strictly positive weights and full row rank.
Vec weighted_min_norm_solve(const SensingMatrix& a, const Vec& y,
                            const Vec& weights);

}  // namespace nsclab
