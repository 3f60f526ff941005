#pragma once

// Test-only oracles, kept independent of the production search paths: the
// brute-force gamma samples the null sphere densely instead of enumerating
// orthants or refining grids, and the exhaustive theta maximum loops over
// every support.

#include "nsclab/combin.hpp"
#include "nsclab/nsc.hpp"

#include <cmath>
#include <limits>

namespace oracles {

using nsclab::Index;
using nsclab::Vec;

// Max of theta(p, z, S) over all supports with #S <= k.
inline double exhaustive_theta_max(double p, const Vec& z, int k,
                                   double zero_tol = 1e-9) {
  double best = -std::numeric_limits<double>::infinity();
  for (int size = 1; size <= k; ++size) {
    std::vector<Index> combo = nsclab::first_combination(size);
    do {
      const double v =
          nsclab::theta(p, z, nsclab::SupportSet(combo), zero_tol);
      best = std::max(best, v);
    } while (nsclab::next_combination(combo, z.size()));
  }
  return best;
}

// Dense sampling of the unit sphere in null-space coefficients; only
// nullities 1 and 2 are supported. The value is a certified lower bound on
// gamma with resolution limited by the sample count.
inline double brute_force_gamma(const nsclab::NullSpaceBasis& basis, double p,
                                int k, int samples = 200001) {
  const nsclab::Mat& b = basis.basis;
  if (basis.dimension() == 1) {
    return nsclab::theta_top_k(p, b.col(0), k);
  }
  if (basis.dimension() != 2) return std::nan("");
  const double pi = std::acos(-1.0);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double phi = pi * i / samples;
    const Vec z = b.col(0) * std::cos(phi) + b.col(1) * std::sin(phi);
    best = std::max(best, nsclab::theta_top_k(p, z, k));
  }
  return best;
}

}  // namespace oracles
