#ifndef MINCTRL_REDUCTIONS_HPP
#define MINCTRL_REDUCTIONS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "minctrl/rational_matrix.hpp"

namespace minctrl {

/// Collection of p subsets of the ground set {0, ..., m-1}.
struct HittingSetInstance {
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> sets;

  std::size_t p() const { return sets.size(); }
  // Every set nonempty, elements in range, every element covered. Throws
  // InvalidInput naming the offending set or element.
  void validate() const;
  bool is_hit_by(std::span<const std::size_t> elements) const;
};

// Coordinates of the reduced system: elements occupy [0, m), sets occupy
// [m, m + p) and the anchor sits at m + p.
struct ReductionIndexMap {
  std::size_t m = 0;
  std::size_t p = 0;
  std::size_t element(std::size_t e) const { return e; }
  std::size_t set(std::size_t s) const { return m + s; }
  std::size_t anchor() const { return m + p; }
  std::size_t dimension() const { return m + p + 1; }
};

struct ReductionOutput {
  RationalMatrix v;
  RationalMatrix a;
  std::vector<Rational> eigenvalues;  // 1, ..., m + p + 1
  ReductionIndexMap index_map;
};

struct SymmetricExtensionOutput {
  RationalMatrix v_hat;
  RationalMatrix a_hat;
  std::size_t r = 0;
  std::size_t base_dimension = 0;  // m + p + 1
  // Column base_dimension + k carries the pair column_pairs[k] (i < j);
  // column r - 1 is the final extra column.
  std::vector<std::pair<std::size_t, std::size_t>> column_pairs;
};

// p x m 0/1 matrix, row i is the indicator of set i.
RationalMatrix incidence_matrix(const HittingSetInstance& inst);

//  [ 2 I_m        0         1 ]
//  [ C        (m+1) I_p     0 ]
//  [ 0            0         1 ]
RationalMatrix build_V(const HittingSetInstance& inst);

// A = V^{-1} diag(1..m+p+1) V, with V A == D V checked exactly before return.
ReductionOutput build_reduction(const HittingSetInstance& inst);

// Closed-form V^{-1}; equals build_V(inst).inverse().
RationalMatrix v_inverse_closed_form(const HittingSetInstance& inst);

/// Completes k pairwise-orthogonal vectors of Q^n, all with zero first
/// coordinate, to an orthogonal basis whose n - k new vectors all have a
/// nonzero first coordinate.
///
/// Seeds the completion with e_1, fills the rest by Gram-Schmidt over the
/// standard basis, then repairs each new vector with zero first entry by
/// the pairwise update v_l <- c v_l + w, w <- w - v_l where
/// c = |w|^2 / |v_l|^2 and w is the e_1 seed.
std::vector<RationalVector> orthogonal_extension(std::span<const RationalVector> vectors,
                                                 std::size_t n);

// Symmetric instance with the same hardness: V_hat has orthogonal rows, so
// A_hat = V_hat^{-1} diag(1..r) V_hat is symmetric.
SymmetricExtensionOutput build_symmetric_extension(const HittingSetInstance& inst);

}  // namespace minctrl

#endif  // MINCTRL_REDUCTIONS_HPP
