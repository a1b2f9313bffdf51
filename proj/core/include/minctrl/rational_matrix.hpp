#ifndef MINCTRL_RATIONAL_MATRIX_HPP
#define MINCTRL_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "minctrl/dense_matrix.hpp"

namespace minctrl {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Exact rational matrix, row-major. Every stored entry is kept canonical
/// (positive denominator, gcd(num, den) == 1).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(std::span<const Rational> d);
  static RationalMatrix from_rows(std::span<const RationalVector> rows);
  // Exact: every finite double is a dyadic rational.
  static RationalMatrix from_dense(const DenseMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  // Assigns and canonicalizes.
  void set(std::size_t r, std::size_t c, Rational v);

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  const std::vector<Rational>& row_major() const { return data_; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(std::span<const Rational> v) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;

  // Gauss-Jordan over Q. Throws InvalidInput when singular or non-square.
  RationalMatrix inverse() const;

  bool is_symmetric() const;
  bool is_zero() const;
  DenseMatrix to_dense() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Parses "p", "p/q" (q != 0) or a decimal literal such as "-0.25".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace minctrl

#endif  // MINCTRL_RATIONAL_MATRIX_HPP
