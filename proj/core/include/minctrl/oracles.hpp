#ifndef MINCTRL_ORACLES_HPP
#define MINCTRL_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minctrl/dense_matrix.hpp"
#include "minctrl/ranker.hpp"
#include "minctrl/rational_matrix.hpp"
#include "minctrl/reductions.hpp"

namespace minctrl {

/// Exact optimum from exhaustive search. Candidates are enumerated by
/// increasing size, lexicographically within a size; the first feasible
/// candidate is the witness.
struct OracleResult {
  std::size_t optimum = 0;
  std::vector<std::size_t> witness;  // zero-based
  std::uint64_t enumerated = 0;

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

inline constexpr std::size_t kHittingSetGuard = 20;
inline constexpr std::size_t kSupportGuard = 14;

struct OracleOptions {
  bool override_guard = false;
};

// Throws GuardExceeded when m > 20 unless overridden.
OracleResult brute_force_hitting_set(const HittingSetInstance& inst, OracleOptions opts = {});

// Smallest support meeting every row of v_rows (the exact left eigenvectors of
// a matrix with distinct eigenvalues). Throws GuardExceeded when n > 14.
OracleResult brute_force_min_vector_support(const RationalMatrix& v_rows,
                                            OracleOptions opts = {});

// Smallest diagonal B with v^T B != 0 for every row v, checked by forming
// v^T B column by column. Same optimum as the vector oracle by construction
// of the problem, but computed along a separate path.
OracleResult brute_force_min_diagonal_support(const RationalMatrix& v_rows,
                                              OracleOptions opts = {});

// rank C(A, B) == n under the chosen backend.
bool kalman_test(const DenseMatrix& a, const DenseMatrix& b, RankBackend backend,
                 const RankOptions& opts = {});
bool kalman_test(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace minctrl

#endif  // MINCTRL_ORACLES_HPP
