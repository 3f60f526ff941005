#pragma once

#include "nsclab/types.hpp"

#include <vector>

namespace nsclab {

/// Advances a k-combination of {0..n-1} in lexicographic order; returns
/// false once the last combination has been visited.
inline bool next_combination(std::vector<Index>& c, Index n) {
  const Index k = static_cast<Index>(c.size());
  Index i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (Index j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

inline std::vector<Index> first_combination(Index k) {
  std::vector<Index> c(static_cast<size_t>(k));
  for (Index j = 0; j < k; ++j) c[static_cast<size_t>(j)] = j;
  return c;
}

}  // namespace nsclab
