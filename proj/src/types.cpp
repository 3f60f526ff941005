#include "nsclab/types.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace nsclab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NumericalInconsistency: return "NumericalInconsistency";
    case ErrorCode::NotAWitness: return "NotAWitness";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoSolutionWithinKmax: return "NoSolutionWithinKmax";
  }
  return "UnknownError";
}

SensingMatrix::SensingMatrix(Mat m, std::optional<Provenance> prov)
    : entries(std::move(m)), provenance(std::move(prov)) {
  if (entries.rows() < 1 || entries.cols() < 1)
    raise(ErrorCode::InvalidMatrix, "sensing matrix must be at least 1x1");
  if (!entries.allFinite())
    raise(ErrorCode::InvalidMatrix, "sensing matrix has non-finite entries");
}

namespace {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string SensingMatrix::id() const {
  std::ostringstream out;
  if (provenance) {
    out << provenance->generator << ":" << rows() << "x" << cols() << ":seed"
        << provenance->seed;
    return out.str();
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const Index dims[2] = {rows(), cols()};
  h = fnv1a(dims, sizeof(dims), h);
  h = fnv1a(entries.data(), sizeof(double) * entries.size(), h);
  out << "mat:" << rows() << "x" << cols() << ":" << std::hex << h;
  return out.str();
}

SupportSet::SupportSet(std::vector<Index> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    raise(ErrorCode::InvalidArgument, "support set has duplicate indices");
  if (!indices_.empty() && indices_.front() < 0)
    raise(ErrorCode::InvalidArgument, "support set has negative index");
}

bool SupportSet::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

}  // namespace nsclab
