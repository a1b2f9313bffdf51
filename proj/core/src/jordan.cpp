#include "minctrl/jordan.hpp"

#include <numeric>
#include <string>

#include "minctrl/error.hpp"
#include "minctrl/rank.hpp"

namespace minctrl {

JordanSpec::JordanSpec(std::vector<Rational> block_eigenvalues,
                       std::vector<std::size_t> block_sizes, RationalMatrix t_inverse)
    : eigenvalues_(std::move(block_eigenvalues)),
      sizes_(std::move(block_sizes)),
      t_inverse_(std::move(t_inverse)) {
  if (eigenvalues_.size() != sizes_.size()) {
    throw InvalidInput("one eigenvalue is required per Jordan block");
  }
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] == 0) throw InvalidInput("Jordan block " + std::to_string(i) + " is empty");
    for (std::size_t j = i + 1; j < eigenvalues_.size(); ++j) {
      if (eigenvalues_[i] == eigenvalues_[j]) {
        throw InvalidInput("Jordan blocks " + std::to_string(i) + " and " + std::to_string(j) +
                           " share an eigenvalue");
      }
    }
  }
  const std::size_t total = std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
  if (!t_inverse_.is_square() || total != t_inverse_.rows()) {
    throw InvalidInput("Jordan block sizes must sum to the dimension of T^{-1}");
  }
  if (rank_exact(t_inverse_) != total) throw InvalidInput("T^{-1} is singular");
}

RationalVector JordanSpec::t(std::size_t block, std::size_t j) const {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < block; ++i) offset += sizes_[i];
  return t_inverse_.row(offset + j);
}

RationalMatrix JordanSpec::jordan_form() const {
  const std::size_t n = dimension();
  RationalMatrix j(n, n);
  std::size_t offset = 0;
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    for (std::size_t k = 0; k < sizes_[b]; ++k) {
      j.set(offset + k, offset + k, eigenvalues_[b]);
      if (k + 1 < sizes_[b]) j.set(offset + k, offset + k + 1, 1);
    }
    offset += sizes_[b];
  }
  return j;
}

RationalMatrix JordanSpec::system_matrix() const {
  return t_inverse_.inverse() * jordan_form() * t_inverse_;
}

std::size_t covered_count(const JordanSpec& jordan, std::span<const Rational> b) {
  if (b.size() != jordan.dimension()) throw InvalidInput("b length does not match the Jordan spec");
  std::size_t total = 0;
  std::size_t offset = 0;
  for (std::size_t block = 0; block < jordan.block_count(); ++block) {
    const std::size_t d = jordan.block_sizes()[block];
    for (std::size_t j = d; j > 0; --j) {
      const RationalVector row = jordan.t_inverse().row(offset + j - 1);
      if (sgn(dot(row, b)) != 0) {
        total += j;
        break;
      }
    }
    offset += d;
  }
  return total;
}

}  // namespace minctrl
