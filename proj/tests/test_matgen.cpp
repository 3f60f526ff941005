#include "nsclab/matgen.hpp"

#include "nsclab/spark.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

using namespace nsclab;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/nsclab_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("generation is a pure function of the spec") {
  GeneratorSpec spec;
  spec.dist = Dist::Gaussian;
  spec.rows = 5;
  spec.cols = 9;
  spec.seed = 1234;
  const SensingMatrix a = gen_matrix(spec);
  const SensingMatrix b = gen_matrix(spec);
  CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() == 0.0);

  spec.seed = 1235;
  const SensingMatrix c = gen_matrix(spec);
  CHECK((a.entries - c.entries).cwiseAbs().maxCoeff() > 0.0);

  spec.dist = Dist::Uniform;
  const SensingMatrix u = gen_matrix(spec);
  CHECK(u.entries.cwiseAbs().maxCoeff() <= 1.0);
}

TEST_CASE("column normalization") {
  GeneratorSpec spec;
  spec.rows = 4;
  spec.cols = 8;
  spec.seed = 77;
  spec.normalize_columns = true;
  const SensingMatrix a = gen_matrix(spec);
  for (Index j = 0; j < a.cols(); ++j)
    CHECK(std::abs(a.entries.col(j).norm() - 1.0) <= 1e-12);
}

TEST_CASE("generated gaussian matrices have full spark") {
  GeneratorSpec spec;
  spec.rows = 4;
  spec.cols = 8;
  spec.seed = 3141;
  CHECK(compute_spark(gen_matrix(spec)).spark == 5);
}

TEST_CASE("sparse vectors have the requested structure") {
  const Vec dense = gen_sparse_vector(6, 6, Dist::Uniform, 5);
  CHECK(dense.cwiseAbs().minCoeff() >= 0.1);

  const Vec single = gen_sparse_vector(6, 1, Dist::Gaussian, 5);
  int nonzeros = 0;
  for (Index i = 0; i < 6; ++i)
    if (single(i) != 0.0) ++nonzeros;
  CHECK(nonzeros == 1);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Vec v = gen_sparse_vector(9, 3, Dist::Uniform, seed);
    int count = 0;
    for (Index i = 0; i < 9; ++i) {
      if (v(i) != 0.0) {
        ++count;
        CHECK(std::abs(v(i)) >= 0.1);
        CHECK(std::abs(v(i)) <= 1.0 + 1e-12);
      }
    }
    CHECK(count == 3);
  }
}

TEST_CASE("support distribution is uniform within a 3-sigma binomial band") {
  const Index n = 8;
  const int k = 2;
  const int draws = 10000;
  std::vector<int> counts(static_cast<size_t>(n), 0);
  for (int t = 0; t < draws; ++t) {
    const Vec v = gen_sparse_vector(n, k, Dist::Uniform,
                                    static_cast<std::uint64_t>(t));
    for (Index i = 0; i < n; ++i)
      if (v(i) != 0.0) ++counts[static_cast<size_t>(i)];
  }
  const double q = double(k) / double(n);
  const double mean = draws * q;
  const double sigma = std::sqrt(draws * q * (1.0 - q));
  for (Index i = 0; i < n; ++i) {
    CHECK(std::abs(counts[static_cast<size_t>(i)] - mean) <= 3.0 * sigma);
  }
}

TEST_CASE("matrix files round-trip exactly") {
  GeneratorSpec spec;
  spec.rows = 3;
  spec.cols = 5;
  spec.seed = 99;
  const SensingMatrix a = gen_matrix(spec);

  TempFile file("roundtrip.csv");
  write_matrix(a, file.path);
  const SensingMatrix back = read_matrix(file.path);
  CHECK((a.entries - back.entries).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("comments and blank lines are ignored") {
  TempFile file("comments.csv");
  {
    std::ofstream out(file.path);
    out << "# header comment\n";
    out << "1,2,3\n";
    out << "\n";
    out << "  # indented comment\n";
    out << "4,5,6\n";
  }
  const SensingMatrix a = read_matrix(file.path);
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a.entries(1, 2) == 6.0);
}

TEST_CASE("ragged rows raise DimensionMismatch") {
  TempFile file("ragged.csv");
  {
    std::ofstream out(file.path);
    out << "1,2,3\n1,2\n";
  }
  try {
    (void)read_matrix(file.path);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("parse errors carry the position") {
  TempFile file("garbage.csv");
  {
    std::ofstream out(file.path);
    out << "1,2\n1,oops\n";
  }
  try {
    (void)read_matrix(file.path);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("vector files round-trip") {
  Vec v(4);
  v << 1.5, -2.25, 1e-17, 4.0;
  TempFile file("vec.csv");
  write_vector(v, file.path);
  const Vec back = read_vector(file.path);
  CHECK((v - back).cwiseAbs().maxCoeff() == 0.0);
}
