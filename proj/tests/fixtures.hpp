#pragma once

#include "nsclab/matgen.hpp"
#include "nsclab/types.hpp"

#include <cmath>

namespace fixtures {

using nsclab::Mat;
using nsclab::SensingMatrix;

// (1/sqrt 2) [[1,1],[1,1]]: null space span([1,-1]), gamma(lp,A,1) = 1 for
// every p.
inline SensingMatrix counterexample() {
  Mat m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, s;
  return SensingMatrix(m);
}

// 1x2 [1 2]: null space span([2,-1]).
inline SensingMatrix row12() {
  Mat m(1, 2);
  m << 1, 2;
  return SensingMatrix(m);
}

// [[1,0,1],[0,1,1]]: null space span([1,1,-1]) with equal magnitudes.
inline SensingMatrix two_by_three() {
  Mat m(2, 3);
  m << 1, 0, 1, 0, 1, 1;
  return SensingMatrix(m);
}

// 3x4 with null space exactly span([3,1,1,1]).
inline SensingMatrix d1_3111() {
  Mat m(3, 4);
  m << 1, -3, 0, 0,
       0, 1, -1, 0,
       0, 0, 1, -1;
  return SensingMatrix(m);
}

inline SensingMatrix gaussian(nsclab::Index rows, nsclab::Index cols,
                              std::uint64_t seed, bool normalize = false) {
  nsclab::GeneratorSpec spec;
  spec.dist = nsclab::Dist::Gaussian;
  spec.rows = rows;
  spec.cols = cols;
  spec.seed = seed;
  spec.normalize_columns = normalize;
  return nsclab::gen_matrix(spec);
}

}  // namespace fixtures
