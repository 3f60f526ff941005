#pragma once

#include "nsclab/types.hpp"

#include <cstdint>
#include <string>

namespace nsclab {

enum class Dist { Gaussian, Uniform };

const char* to_string(Dist dist);
Dist parse_dist(const std::string& name);

/// Recipe for a seeded random sensing matrix. Entries are i.i.d. from a
/// continuous distribution; gaussian(0,1) or uniform(-1,1).
struct GeneratorSpec {
  Dist dist = Dist::Gaussian;
  Index rows = 0;
  Index cols = 0;
  std::uint64_t seed = 0;
  bool normalize_columns = false;
};

/// Deterministic matrix draw: each entry comes from its own counter-derived
/// substream, so the result is a pure function of the spec.
SensingMatrix gen_matrix(const GeneratorSpec& spec);

/// k-sparse vector with a uniformly random support and continuous nonzero
/// values bounded away from zero (|v| >= 0.1).
Vec gen_sparse_vector(Index n, int k, Dist dist, std::uint64_t seed);

// Plain-text matrix format: one row per line, comma-separated decimal
// floats, '#' starts a comment line. Vectors use one entry per line.
SensingMatrix read_matrix(const std::string& path);
void write_matrix(const SensingMatrix& a, const std::string& path);
Vec read_vector(const std::string& path);
void write_vector(const Vec& v, const std::string& path);

}  // namespace nsclab
