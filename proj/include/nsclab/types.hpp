#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsclab {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorCode {
  InvalidMatrix,
  InvalidArgument,
  RankDeficient,
  TooLarge,
  ZeroVector,
  WrongDimension,
  NumericalInconsistency,
  NotAWitness,
  ParseError,
  DimensionMismatch,
  NoSolutionWithinKmax,
};

const char* to_string(ErrorCode code);

/// Library error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

struct Provenance {
  std::string generator;
  std::uint64_t seed = 0;
};

/// Dense real M x N sensing matrix. Entries must be finite.
struct SensingMatrix {
  Mat entries;
  std::optional<Provenance> provenance;

  SensingMatrix() = default;
  explicit SensingMatrix(Mat m, std::optional<Provenance> prov = std::nullopt);

  Index rows() const { return entries.rows(); }
  Index cols() const { return entries.cols(); }

  /// Stable identifier for data records: the provenance string when the
  /// matrix was generated, a content hash otherwise.
  std::string id() const;
};

/// Orthonormal basis B of the null space of a sensing matrix, so that
/// every null vector is B*w for some coefficient vector w.
struct NullSpaceBasis {
  Index parent_rows = 0;
  Index parent_cols = 0;
  Mat basis;  // parent_cols x dimension, orthonormal columns

  Index dimension() const { return basis.cols(); }
};

/// Sorted set of distinct 0-based coordinate indices.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<Index> indices);

  const std::vector<Index>& indices() const { return indices_; }
  Index size() const { return static_cast<Index>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(Index i) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<Index> indices_;
};

}  // namespace nsclab
