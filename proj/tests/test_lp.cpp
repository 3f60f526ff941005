#include "nsclab/lp.hpp"

#include "nsclab/rng.hpp"

#include <doctest.h>

using namespace nsclab;

namespace {

LpProblem make(std::initializer_list<std::initializer_list<double>> rows,
               std::initializer_list<double> rhs,
               std::initializer_list<double> obj) {
  LpProblem lp;
  lp.a = Mat(static_cast<Index>(rows.size()),
             static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) lp.a(i, j++) = v;
    ++i;
  }
  lp.b = Vec(static_cast<Index>(rhs.size()));
  Index bi = 0;
  for (double v : rhs) lp.b(bi++) = v;
  lp.c = Vec(static_cast<Index>(obj.size()));
  Index ci = 0;
  for (double v : obj) lp.c(ci++) = v;
  return lp;
}

}  // namespace

TEST_CASE("simple equality-constrained maximum") {
  // max x1 subject to x1 + x2 = 1.
  const LpSolution sol = solve_lp(make({{1, 1}}, {1}, {1, 0}));
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sol.x(0) == doctest::Approx(1.0));
  CHECK(sol.x(1) == doctest::Approx(0.0));
}

TEST_CASE("two constraints") {
  // max 3x1 + 2x2 with x1 + x2 + s1 = 4, x1 + 3x2 + s2 = 6.
  const LpSolution sol =
      solve_lp(make({{1, 1, 1, 0}, {1, 3, 0, 1}}, {4, 6}, {3, 2, 0, 0}));
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("infeasible program detected") {
  // x1 + x2 = -1 with x >= 0.
  const LpSolution sol = solve_lp(make({{1, 1}}, {-1}, {1, 1}));
  CHECK(sol.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded program detected") {
  // max x1 subject to x1 - x2 = 0: both can grow without bound.
  const LpSolution sol = solve_lp(make({{1, -1}}, {0}, {1, 0}));
  CHECK(sol.status == LpStatus::Unbounded);
}

TEST_CASE("degenerate vertices terminate under Bland's rule") {
  // Several redundant ways to express the same vertex.
  const LpSolution sol = solve_lp(make(
      {{1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 0, 0, 0, 1}}, {1, 1, 1},
      {2, 1, 0, 0, 0}));
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("box programs with known optima") {
  // max c'x with x_i + s_i = u_i splits per coordinate: take u_i when c_i > 0.
  SplitStream stream = SplitStream::derive(31, 95, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 4;
    Mat a = Mat::Zero(n, 2 * n);
    Vec b(n), c = Vec::Zero(2 * n);
    double expected = 0.0;
    for (Index i = 0; i < n; ++i) {
      a(i, i) = 1.0;
      a(i, n + i) = 1.0;
      b(i) = 0.5 + stream.next_unit();
      c(i) = stream.next_gaussian();
      if (c(i) > 0) expected += c(i) * b(i);
    }
    const LpSolution sol = solve_lp({a, b, c});
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == doctest::Approx(expected).epsilon(1e-9));
    CHECK((a * sol.x - b).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(sol.x.minCoeff() >= -1e-9);
  }
}
