#include "nsclab/recovery.hpp"

#include "fixtures.hpp"
#include "nsclab/derived.hpp"
#include "nsclab/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace nsclab;

namespace {

Vec make_vec(std::initializer_list<double> values) {
  Vec v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("exhaustive l0 solver on hand cases") {
  const SensingMatrix a = fixtures::two_by_three();

  const L0Result zero = solve_l0_exhaustive(a, Vec::Zero(2), 2);
  CHECK(zero.support_size == 0);
  CHECK(zero.unique);
  CHECK(zero.solutions.front().norm() == 0.0);

  const L0Result one = solve_l0_exhaustive(a, make_vec({5, 0}), 2);
  CHECK(one.support_size == 1);
  CHECK(one.unique);
  CHECK((one.solutions.front() - make_vec({5, 0, 0})).norm() <= 1e-9);

  const L0Result two = solve_l0_exhaustive(fixtures::row12(), make_vec({2}), 1);
  CHECK(two.support_size == 1);
  CHECK(!two.unique);
  REQUIRE(two.solutions.size() == 2);
}

TEST_CASE("l0 solver failure modes") {
  Mat id(2, 2);
  id << 1, 0, 0, 1;
  try {
    (void)solve_l0_exhaustive(SensingMatrix(id), make_vec({1, 1}), 1);
    FAIL("expected NoSolutionWithinKmax");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSolutionWithinKmax);
  }

  try {
    (void)solve_l0_exhaustive(fixtures::gaussian(4, 24, 1), Vec::Zero(4), 2);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("l0 uniqueness matches the floor(L/2) rule") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const SensingMatrix a = fixtures::gaussian(4, 8, seed);  // L = 4
    for (int k : {1, 2}) {
      const Vec x = gen_sparse_vector(8, k, Dist::Uniform, seed * 31 + k);
      const L0Result res = solve_l0_exhaustive(a, Vec(a.entries * x), k);
      CHECK(res.unique);
      CHECK((res.solutions.front() - x).lpNorm<Eigen::Infinity>() <= 1e-7);
    }
  }
}

TEST_CASE("irls on hand cases") {
  const SensingMatrix a = fixtures::two_by_three();

  const SolverResult zero = irls_lp(a, Vec::Zero(2), 0.5);
  CHECK(zero.x_hat.norm() <= 1e-12);

  const SolverResult sparse = irls_lp(a, make_vec({5, 0}), 0.5);
  CHECK((sparse.x_hat - make_vec({5, 0, 0})).lpNorm<Eigen::Infinity>() <= 1e-5);
  CHECK(sparse.converged);

  // ||[0,1]||_1 = 1 < 2 = ||[2,0]||_1 on the feasible line.
  const SolverResult l1 = irls_lp(fixtures::row12(), make_vec({2}), 1.0);
  CHECK((l1.x_hat - make_vec({0, 1})).lpNorm<Eigen::Infinity>() <= 1e-5);
}

TEST_CASE("irls iterates stay feasible and stage objectives decrease") {
  for (std::uint64_t seed : {3, 4}) {
    const SensingMatrix a = fixtures::gaussian(4, 8, seed);
    const Vec x = gen_sparse_vector(8, 2, Dist::Uniform, seed);
    const Vec y = a.entries * x;
    for (double p : {0.5, 1.0}) {
      const SolverResult res = irls_lp(a, y, p);
      CHECK(res.worst_residual <= 1e-8 * (1.0 + y.norm()));
      CHECK(res.residual <= 1e-8 * (1.0 + y.norm()));
      for (size_t s = 0; s + 1 < res.stage_objectives.size(); ++s)
        CHECK(res.stage_objectives[s + 1] <=
              res.stage_objectives[s] + 1e-10);
    }
  }
}

TEST_CASE("irls requires full row rank and p in (0,1]") {
  Mat deficient(2, 3);
  deficient << 1, 2, 3, 2, 4, 6;
  try {
    (void)irls_lp(SensingMatrix(deficient), make_vec({1, 2}), 0.5);
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
  CHECK_THROWS_AS((void)irls_lp(fixtures::row12(), make_vec({1}), 0.0), Error);
}

TEST_CASE("failure witness from the [1 2] fixture") {
  // Unnormalized certificate z = [2, -1], S = {0}: theta(1) = 2.
  Certificate cert{make_vec({2, -1}), SupportSet({0}), 2.0};
  const WitnessResult wit = failure_witness(fixtures::row12(), cert, 1.0);
  CHECK((wit.instance.x_true - make_vec({2, 0})).norm() <= 1e-12);
  CHECK((wit.x_alt - make_vec({0, 1})).norm() <= 1e-12);
  CHECK(wit.objective_alt == doctest::Approx(1.0));
  CHECK(wit.objective_star == doctest::Approx(2.0));
  CHECK(wit.objective_alt < wit.objective_star);
  CHECK(wit.instance.sparsity == 1);
}

TEST_CASE("theta exactly one witnesses non-uniqueness") {
  const double s = 1.0 / std::sqrt(2.0);
  Certificate cert{make_vec({s, -s}), SupportSet({0}), 1.0};
  const WitnessResult wit =
      failure_witness(fixtures::counterexample(), cert, 0.5);
  CHECK(wit.objective_alt == doctest::Approx(wit.objective_star).epsilon(1e-12));
  // Same measurements, different vectors.
  const Vec residual = fixtures::counterexample().entries *
                       (wit.x_alt - wit.instance.x_true);
  CHECK(residual.norm() <= 1e-12);
  CHECK((wit.x_alt - wit.instance.x_true).norm() > 0.5);
}

TEST_CASE("certificates below one are rejected as witnesses") {
  Certificate cert{make_vec({2, -1}) / std::sqrt(5.0), SupportSet({1}), 0.5};
  try {
    (void)failure_witness(fixtures::row12(), cert, 1.0);
    FAIL("expected NotAWitness");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAWitness);
  }
}

TEST_CASE("witness soundness on estimator certificates") {
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    const NscContext ctx(fixtures::gaussian(4, 8, seed));
    for (double p : {0.5, 1.0}) {
      const NscEstimate est = nsc_estimate(ctx, NscQuery{p, 3});
      REQUIRE(est.certificate.has_value());
      REQUIRE(est.certificate->theta_value >= 1.0);
      const WitnessResult wit =
          failure_witness(ctx.matrix(), *est.certificate, p);
      CHECK(wit.objective_alt <= wit.objective_star + 1e-12);
      if (est.certificate->theta_value > 1.0 + 1e-9)
        CHECK(wit.objective_alt < wit.objective_star);
    }
  }
}

TEST_CASE("recovery experiment succeeds when gamma certifies uniqueness") {
  // Certified-good fixture: exact gamma(l1, A, 1) <= 0.95.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SensingMatrix a = fixtures::gaussian(4, 8, seed, true);
    const NscContext ctx(a);
    const NscEstimate gamma1 = nsc_estimate(ctx, NscQuery{1.0, 1});
    if (gamma1.status != NscStatus::Exact || gamma1.value > 0.95) continue;
    const ExperimentReport report = recovery_experiment(a, 1, 1.0, 20, seed);
    CHECK(report.rate == 1.0);
    break;
  }
}

TEST_CASE("planted mass on the heavy coordinate of [1 2] never recovers") {
  const SensingMatrix a = fixtures::row12();
  for (double magnitude : {0.3, 1.0, 2.0, 7.5, 40.0}) {
    Vec y(1);
    y << magnitude;  // x_true = [magnitude, 0]
    const SolverResult res = irls_lp(a, y, 1.0);
    CHECK((res.x_hat - make_vec({magnitude, 0.0})).lpNorm<Eigen::Infinity>() >
          1e-3);
    // The light coordinate is always recovered.
    Vec y2(1);
    y2 << 2 * magnitude;  // x_true = [0, magnitude]
    const SolverResult res2 = irls_lp(a, y2, 1.0);
    CHECK((res2.x_hat - make_vec({0.0, magnitude})).lpNorm<Eigen::Infinity>() <=
          1e-5);
  }
}

TEST_CASE("experiment argument validation") {
  CHECK_THROWS_AS(
      (void)recovery_experiment(fixtures::row12(), 1, 1.0, 0, 1), Error);
  CHECK_THROWS_AS(
      (void)recovery_experiment(fixtures::row12(), 5, 1.0, 1, 1), Error);
}

TEST_CASE("p = 0 experiments use the exhaustive solver") {
  const SensingMatrix a = fixtures::gaussian(4, 8, 9);
  const ExperimentReport report = recovery_experiment(a, 2, 0.0, 10, 42);
  CHECK(report.rate == 1.0);  // k = 2 = floor(L/2) guarantees uniqueness
}
