#include "nsclab/matgen.hpp"

#include "nsclab/rng.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace nsclab {

const char* to_string(Dist dist) {
  return dist == Dist::Gaussian ? "gaussian" : "uniform";
}

Dist parse_dist(const std::string& name) {
  if (name == "gaussian") return Dist::Gaussian;
  if (name == "uniform") return Dist::Uniform;
  raise(ErrorCode::InvalidArgument, "unknown distribution '" + name + "'");
}

namespace {

double draw(SplitStream& stream, Dist dist) {
  return dist == Dist::Gaussian ? stream.next_gaussian()
                                : stream.next_symmetric();
}

}  // namespace

SensingMatrix gen_matrix(const GeneratorSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1)
    raise(ErrorCode::InvalidArgument, "gen_matrix: dimensions must be positive");
  Mat m(spec.rows, spec.cols);
  for (Index i = 0; i < spec.rows; ++i) {
    for (Index j = 0; j < spec.cols; ++j) {
      SplitStream stream = SplitStream::derive(
          spec.seed, rng_tag::kMatrixEntry,
          static_cast<std::uint64_t>(i * spec.cols + j));
      m(i, j) = draw(stream, spec.dist);
    }
  }
  if (spec.normalize_columns) {
    for (Index j = 0; j < spec.cols; ++j) m.col(j) /= m.col(j).norm();
  }
  std::string name = to_string(spec.dist);
  if (spec.normalize_columns) name += "-unit";
  return SensingMatrix(std::move(m), Provenance{name, spec.seed});
}

Vec gen_sparse_vector(Index n, int k, Dist dist, std::uint64_t seed) {
  if (k < 1 || k > n)
    raise(ErrorCode::InvalidArgument, "gen_sparse_vector: k out of range");

  // Partial Fisher-Yates gives a uniform size-k support.
  SplitStream support_stream = SplitStream::derive(seed, rng_tag::kSupport, 0);
  std::vector<Index> pool(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<Index>(support_stream.next_below(
                           static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
  }

  Vec v = Vec::Zero(n);
  for (int i = 0; i < k; ++i) {
    SplitStream value_stream =
        SplitStream::derive(seed, rng_tag::kValues, static_cast<std::uint64_t>(i));
    const double raw = draw(value_stream, dist);
    // Magnitudes at least 0.1 keep sparsity unambiguous at zero_tol.
    const double sign = raw < 0.0 ? -1.0 : 1.0;
    double mag;
    if (dist == Dist::Gaussian) {
      mag = 0.1 + std::abs(raw);
    } else {
      mag = 0.1 + 0.9 * std::abs(raw);
    }
    v(pool[static_cast<size_t>(i)]) = sign * mag;
  }
  return v;
}

namespace {

struct Parser {
  std::istream& in;
  const std::string& path;
  int line_no = 0;

  std::vector<std::vector<double>> parse_rows(bool comma_separated) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      // Strip trailing carriage return from files written on other systems.
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view view(line);
      size_t first = view.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;
      if (view[first] == '#') continue;
      rows.push_back(parse_line(line, comma_separated));
    }
    return rows;
  }

  std::vector<double> parse_line(const std::string& line, bool comma_separated) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
        ++pos;
      if (pos >= line.size()) break;
      const char* begin = line.c_str() + pos;
      char* end = nullptr;
      const double value = std::strtod(begin, &end);
      if (end == begin)
        raise(ErrorCode::ParseError,
              path + ":" + std::to_string(line_no) + ":" +
                  std::to_string(pos + 1) + ": expected a number");
      pos = static_cast<size_t>(end - line.c_str());
      out.push_back(value);
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
        ++pos;
      if (pos < line.size()) {
        if (comma_separated && line[pos] == ',') {
          ++pos;
        } else if (!comma_separated) {
          raise(ErrorCode::ParseError,
                path + ":" + std::to_string(line_no) + ":" +
                    std::to_string(pos + 1) + ": one entry per line expected");
        } else {
          raise(ErrorCode::ParseError,
                path + ":" + std::to_string(line_no) + ":" +
                    std::to_string(pos + 1) + ": expected ',' between entries");
        }
      }
    }
    if (out.empty())
      raise(ErrorCode::ParseError,
            path + ":" + std::to_string(line_no) + ": empty data line");
    return out;
  }
};

}  // namespace

SensingMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open '" + path + "'");
  Parser parser{in, path};
  const auto rows = parser.parse_rows(true);
  if (rows.empty()) raise(ErrorCode::ParseError, path + ": no data rows");
  const size_t cols = rows.front().size();
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      raise(ErrorCode::DimensionMismatch,
            path + ": row " + std::to_string(i + 1) + " has " +
                std::to_string(rows[i].size()) + " entries, expected " +
                std::to_string(cols));
  }
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return SensingMatrix(std::move(m));
}

void write_matrix(const SensingMatrix& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out.precision(17);
  if (a.provenance)
    out << "# " << a.provenance->generator << " seed=" << a.provenance->seed
        << "\n";
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ",";
      out << a.entries(i, j);
    }
    out << "\n";
  }
}

Vec read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open '" + path + "'");
  Parser parser{in, path};
  const auto rows = parser.parse_rows(false);
  Vec v(static_cast<Index>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) v(static_cast<Index>(i)) = rows[i][0];
  return v;
}

void write_vector(const Vec& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out.precision(17);
  for (Index i = 0; i < v.size(); ++i) out << v(i) << "\n";
}

}  // namespace nsclab
