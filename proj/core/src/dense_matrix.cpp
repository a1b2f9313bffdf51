#include "minctrl/dense_matrix.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "minctrl/error.hpp"

namespace minctrl {
namespace {

void require_finite(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) {
    throw InvalidInput("matrix contains NaN or infinite entries");
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : m_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols))) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::span<const double> row_major) {
  if (row_major.size() != rows * cols) {
    throw InvalidInput("matrix data has " + std::to_string(row_major.size()) +
                       " entries, expected " + std::to_string(rows * cols));
  }
  m_.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m_(r, c) = row_major[r * cols + c];
    }
  }
  require_finite(m_);
}

DenseMatrix::DenseMatrix(Eigen::MatrixXd m) : m_(std::move(m)) { require_finite(m_); }

DenseMatrix DenseMatrix::identity(std::size_t n) {
  return DenseMatrix(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                               static_cast<Eigen::Index>(n)));
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> d) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d.size()),
                                            static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return DenseMatrix(std::move(m));
}

DenseMatrix DenseMatrix::column(std::span<const double> v) {
  return DenseMatrix(v.size(), 1, v);
}

std::vector<double> DenseMatrix::row_major() const {
  std::vector<double> out;
  out.reserve(rows() * cols());
  for (Eigen::Index r = 0; r < m_.rows(); ++r) {
    for (Eigen::Index c = 0; c < m_.cols(); ++c) out.push_back(m_(r, c));
  }
  return out;
}

std::uint64_t DenseMatrix::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const void* p, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  const std::uint64_t dims[2] = {rows(), cols()};
  mix(dims, sizeof(dims));
  for (double v : row_major()) {
    // Normalize -0.0 so equal matrices hash equally.
    double x = (v == 0.0) ? 0.0 : v;
    mix(&x, sizeof(x));
  }
  return h;
}

}  // namespace minctrl
