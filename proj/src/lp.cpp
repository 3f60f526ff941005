#include "nsclab/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace nsclab {

namespace {

constexpr double kEnterTol = 1e-9;
constexpr double kPivotTol = 1e-11;

struct Tableau {
  Mat t;      // rows x ncols
  Vec rhs;    // rows, kept nonnegative
  Eigen::RowVectorXd obj;  // reduced costs
  double obj_value = 0.0;
  std::vector<Index> basis;  // basic column per row

  Index rows() const { return t.rows(); }
  Index cols() const { return t.cols(); }

  void price_out(const Eigen::RowVectorXd& oc) {
    obj = oc;
    obj_value = 0.0;
    for (Index i = 0; i < rows(); ++i) {
      const double cb = oc(basis[static_cast<size_t>(i)]);
      if (cb != 0.0) {
        obj -= cb * t.row(i);
        obj_value += cb * rhs(i);
      }
    }
  }

  void pivot(Index row, Index col) {
    const double p = t(row, col);
    t.row(row) /= p;
    rhs(row) /= p;
    for (Index i = 0; i < rows(); ++i) {
      if (i == row) continue;
      const double f = t(i, col);
      if (f != 0.0) {
        t.row(i) -= f * t.row(row);
        rhs(i) -= f * rhs(row);
        if (rhs(i) < 0.0 && rhs(i) > -1e-12) rhs(i) = 0.0;
      }
    }
    const double fo = obj(col);
    if (fo != 0.0) {
      obj -= fo * t.row(row);
      obj_value += fo * rhs(row);
    }
    basis[static_cast<size_t>(row)] = col;
  }

  // Bland's rule: enter the smallest-index improving column; leave on the
  // minimum ratio, ties broken by smallest basic variable index.
  // Returns Optimal when no column improves, Unbounded when the entering
  // column has no positive entry.
  LpStatus iterate(Index allowed_cols) {
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < allowed_cols; ++j) {
        if (obj(j) > kEnterTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      Index leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < rows(); ++i) {
        const double a = t(i, enter);
        if (a > kPivotTol) {
          const double ratio = rhs(i) / a;
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && leave >= 0 &&
               basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const Index m = problem.a.rows();
  const Index n = problem.a.cols();
  if (problem.b.size() != m || problem.c.size() != n)
    raise(ErrorCode::WrongDimension, "solve_lp: inconsistent problem dimensions");

  Tableau tab;
  tab.t = Mat::Zero(m, n + m);
  tab.rhs = problem.b;
  tab.t.leftCols(n) = problem.a;
  for (Index i = 0; i < m; ++i) {
    if (tab.rhs(i) < 0.0) {
      tab.rhs(i) = -tab.rhs(i);
      tab.t.row(i).head(n) *= -1.0;
    }
    tab.t(i, n + i) = 1.0;
    tab.basis.push_back(n + i);
  }

  // Phase 1: drive the artificial variables to zero.
  Eigen::RowVectorXd phase1 = Eigen::RowVectorXd::Zero(n + m);
  phase1.tail(m).setConstant(-1.0);
  tab.price_out(phase1);
  if (tab.iterate(n + m) != LpStatus::Optimal)
    raise(ErrorCode::NumericalInconsistency, "solve_lp: phase 1 unbounded");
  if (tab.obj_value < -1e-8) return {LpStatus::Infeasible, Vec(), 0.0};

  // Pivot remaining artificials out of the basis; rows that cannot be
  // pivoted are redundant and harmless with a zero right-hand side.
  for (Index i = 0; i < tab.rows(); ++i) {
    if (tab.basis[static_cast<size_t>(i)] >= n) {
      for (Index j = 0; j < n; ++j) {
        if (std::abs(tab.t(i, j)) > 1e-9) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2 on the original objective; artificial columns may not re-enter.
  Eigen::RowVectorXd phase2 = Eigen::RowVectorXd::Zero(n + m);
  phase2.head(n) = problem.c.transpose();
  tab.price_out(phase2);
  const LpStatus status = tab.iterate(n);
  if (status == LpStatus::Unbounded) return {LpStatus::Unbounded, Vec(), 0.0};

  Vec x = Vec::Zero(n);
  for (Index i = 0; i < tab.rows(); ++i) {
    const Index b = tab.basis[static_cast<size_t>(i)];
    if (b < n) x(b) = tab.rhs(i);
  }
  const double value = problem.c.dot(x);
  return {LpStatus::Optimal, std::move(x), value};
}

}  // namespace nsclab
