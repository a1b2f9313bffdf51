#ifndef MINCTRL_DENSE_MATRIX_HPP
#define MINCTRL_DENSE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace minctrl {

/// Real n x m matrix with finite entries.
///
/// Thin immutable wrapper around Eigen::MatrixXd. Construction rejects
/// NaN/Inf so downstream rank and eigen routines never see them.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::span<const double> row_major);
  explicit DenseMatrix(Eigen::MatrixXd m);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> d);
  static DenseMatrix column(std::span<const double> v);

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  bool is_square() const { return m_.rows() == m_.cols(); }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  const Eigen::MatrixXd& eigen() const { return m_; }
  std::vector<double> row_major() const;

  // FNV-1a over the dimensions and raw entry bytes. Used to tag error reports.
  std::uint64_t hash() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  Eigen::MatrixXd m_;
};

}  // namespace minctrl

#endif  // MINCTRL_DENSE_MATRIX_HPP
