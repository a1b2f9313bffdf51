#include "minctrl/controllability.hpp"

#include "minctrl/error.hpp"

namespace minctrl {

DenseMatrix controllability_matrix(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.is_square()) throw InvalidInput("system matrix A must be square");
  if (b.rows() != a.rows()) throw InvalidInput("input matrix B must have as many rows as A");
  const auto n = static_cast<Eigen::Index>(a.rows());
  const auto m = static_cast<Eigen::Index>(b.cols());
  Eigen::MatrixXd c(n, n * m);
  if (n == 0) return DenseMatrix(std::move(c));
  c.leftCols(m) = b.eigen();
  for (Eigen::Index k = 1; k < n; ++k) {
    c.middleCols(k * m, m) = a.eigen() * c.middleCols((k - 1) * m, m);
  }
  if (!c.allFinite()) throw NumericError("controllability matrix overflowed");
  return DenseMatrix(std::move(c));
}

RationalMatrix controllability_matrix(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square()) throw InvalidInput("system matrix A must be square");
  if (b.rows() != a.rows()) throw InvalidInput("input matrix B must have as many rows as A");
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  RationalMatrix c(n, n * m);
  RationalMatrix block = b;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) block = a * block;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < m; ++j) c.set(r, k * m + j, block(r, j));
    }
  }
  return c;
}

}  // namespace minctrl
