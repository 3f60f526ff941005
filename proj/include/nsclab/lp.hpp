#pragma once

#include "nsclab/types.hpp"

namespace nsclab {

/// Linear program in standard form: maximize c'x subject to a*x = b, x >= 0.
struct LpProblem {
  Mat a;
  Vec b;
  Vec c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vec x;
  double value = 0.0;
};

/// Two-phase dense tableau simplex with Bland's rule, sized for problems of
/// a few dozen variables and constraints.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace nsclab
