#ifndef MINCTRL_RANK_HPP
#define MINCTRL_RANK_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "minctrl/dense_matrix.hpp"
#include "minctrl/rational_matrix.hpp"

namespace minctrl {

// Rank over Q. Each row is cleared of denominators, then reduced with
// fraction-free (Bareiss) elimination and partial pivoting on magnitude.
std::size_t rank_exact(const RationalMatrix& m);

// Same elimination on an integer matrix given row-major; `work` is consumed.
std::size_t rank_bareiss(std::vector<mpz_class>& work, std::size_t rows, std::size_t cols);

struct RankTolerance {
  // When set, singular values <= absolute count as zero. Otherwise the
  // threshold is max(rows, cols) * sigma_max * machine epsilon.
  std::optional<double> absolute;
};

double default_rank_threshold(std::size_t rows, std::size_t cols, double sigma_max);

// Number of singular values above the threshold. Throws NumericError if the
// SVD produces non-finite values.
std::size_t rank_numeric(const DenseMatrix& m, RankTolerance tol = {});

// Basis of {x : m x = 0} over Q, one vector per free column.
std::vector<RationalVector> nullspace_exact(const RationalMatrix& m);

}  // namespace minctrl

#endif  // MINCTRL_RANK_HPP
