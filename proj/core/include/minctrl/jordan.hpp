#ifndef MINCTRL_JORDAN_HPP
#define MINCTRL_JORDAN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "minctrl/rational_matrix.hpp"

namespace minctrl {

/// Synthetic Jordan structure T^{-1} A T = J with one block per distinct
/// eigenvalue. Rows of `t_inverse` are the vectors t(i, j), grouped by block
/// in order; block i occupies rows offset(i) .. offset(i) + size(i) - 1.
class JordanSpec {
 public:
  // Throws InvalidInput if sizes do not sum to the row count, eigenvalues
  // repeat, any block is empty, or t_inverse is singular.
  JordanSpec(std::vector<Rational> block_eigenvalues, std::vector<std::size_t> block_sizes,
             RationalMatrix t_inverse);

  std::size_t dimension() const { return t_inverse_.rows(); }
  std::size_t block_count() const { return sizes_.size(); }
  const std::vector<Rational>& block_eigenvalues() const { return eigenvalues_; }
  const std::vector<std::size_t>& block_sizes() const { return sizes_; }
  const RationalMatrix& t_inverse() const { return t_inverse_; }

  // Row t(block, j) with j zero-based inside the block.
  RationalVector t(std::size_t block, std::size_t j) const;

  RationalMatrix jordan_form() const;
  // T J T^{-1}.
  RationalMatrix system_matrix() const;

 private:
  std::vector<Rational> eigenvalues_;
  std::vector<std::size_t> sizes_;
  RationalMatrix t_inverse_;
};

// Sum over blocks of the largest (1-based) position j with <t(i, j), b> != 0.
std::size_t covered_count(const JordanSpec& jordan, std::span<const Rational> b);

}  // namespace minctrl

#endif  // MINCTRL_JORDAN_HPP
