#ifndef MINCTRL_CONTROLLABILITY_HPP
#define MINCTRL_CONTROLLABILITY_HPP

#include "minctrl/dense_matrix.hpp"
#include "minctrl/rational_matrix.hpp"

namespace minctrl {

// [B, AB, ..., A^{n-1}B]. Throws InvalidInput on dimension mismatch.
DenseMatrix controllability_matrix(const DenseMatrix& a, const DenseMatrix& b);
RationalMatrix controllability_matrix(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace minctrl

#endif  // MINCTRL_CONTROLLABILITY_HPP
