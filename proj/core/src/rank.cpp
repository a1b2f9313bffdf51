#include "minctrl/rank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "minctrl/error.hpp"

namespace minctrl {

std::size_t rank_bareiss(std::vector<mpz_class>& work, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return work[r * cols + c]; };
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (sgn(at(r, col)) == 0) continue;
      if (pivot == rows || mpz_cmpabs(at(r, col).get_mpz_t(), at(pivot, col).get_mpz_t()) > 0) pivot = r;
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols; ++c) swap(at(pivot, c), at(rank, c));
    }
    const mpz_class& p = at(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class f = at(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        // Fraction-free update; the division by the previous pivot is exact.
        tmp = p * at(r, c);
        tmp -= f * at(rank, c);
        mpz_divexact(at(r, c).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      at(r, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> work(rows * cols);
  mpz_class lcm;
  for (std::size_t r = 0; r < rows; ++r) {
    lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m(r, c);
      work[r * cols + c] = q.get_num() * (lcm / q.get_den());
    }
  }
  return rank_bareiss(work, rows, cols);
}

double default_rank_threshold(std::size_t rows, std::size_t cols, double sigma_max) {
  return static_cast<double>(std::max(rows, cols)) * sigma_max *
         std::numeric_limits<double>::epsilon();
}

std::size_t rank_numeric(const DenseMatrix& m, RankTolerance tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m.eigen());
  const Eigen::VectorXd& sv = svd.singularValues();
  if (!sv.allFinite()) {
    throw NumericError("singular value decomposition failed to converge");
  }
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold =
      tol.absolute ? *tol.absolute : default_rank_threshold(m.rows(), m.cols(), sigma_max);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

std::vector<RationalVector> nullspace_exact(const RationalMatrix& m) {
  // Reduced row echelon form over Q.
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RationalMatrix work = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(work(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) {
        Rational a = work(p, k);
        work.set(p, k, work(r, k));
        work.set(r, k, std::move(a));
      }
    }
    const Rational inv = 1 / work(r, c);
    for (std::size_t k = c; k < cols; ++k) work.set(r, k, work(r, k) * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(work(i, c)) == 0) continue;
      const Rational f = work(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(work(r, k)) != 0) work.set(i, k, work(i, k) - f * work(r, k));
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -work(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace minctrl
