#pragma once

#include "nsclab/types.hpp"

#include <vector>

namespace nsclab {

/// Spark(A): the smallest number of linearly dependent columns.
/// spark == cols+1 encodes "no dependent subset" (only possible for a
/// full-column-rank matrix); the witness is absent in that case.
struct SparkResult {
  int spark = 0;
  int L = 0;  // spark - 1
  bool no_dependent_subset = false;
  std::vector<Index> witness;  // column indices, sorted
  Vec witness_coeffs;          // kernel coefficients over the witness columns
  Index cols = 0;
};

/// Exact spark by ordered subset enumeration: subset sizes ascend and within
/// one size subsets are visited in lexicographic order; the first dependent
/// subset found is the witness.
SparkResult compute_spark(const SensingMatrix& a, double rank_tol = 0.0,
                          int max_cols = 24);

}  // namespace nsclab
