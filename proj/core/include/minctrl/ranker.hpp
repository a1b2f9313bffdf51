#ifndef MINCTRL_RANKER_HPP
#define MINCTRL_RANKER_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "minctrl/dense_matrix.hpp"
#include "minctrl/eigen_system.hpp"
#include "minctrl/rank.hpp"
#include "minctrl/rational_matrix.hpp"

namespace minctrl {

enum class RankBackend {
  kSvd,    // numeric rank of the controllability matrix
  kPbh,    // count left eigenvectors not orthogonal to the input
  kExact,  // rank over Q of the exact controllability matrix
};

std::string_view to_string(RankBackend b);
// Accepts "svd", "pbh", "exact". Throws InvalidInput otherwise.
RankBackend parse_rank_backend(std::string_view name);

struct RankOptions {
  RankTolerance svd_tolerance;
  double gap_threshold = kDefaultGapThreshold;
  // Absolute PBH orthogonality tolerance; default 1e-8 * ||b||.
  std::optional<double> orth_tol;
};

/// rank C(A, B) for a fixed A under one backend.
///
/// Vector inputs are doubles; the exact backend converts them without
/// rounding. Diagonal inputs are given as the support of B with unit entries.
class ControllabilityRanker {
 public:
  virtual ~ControllabilityRanker() = default;

  virtual RankBackend backend() const = 0;
  std::size_t dimension() const { return n_; }

  virtual std::size_t vector_rank(std::span<const double> b) const = 0;
  // rank C(A, b + value * e_index), with the sum formed exactly by the exact
  // backend.
  virtual std::size_t probe_rank(std::span<const double> b, std::size_t index,
                                 double value) const;
  virtual std::size_t diagonal_rank(std::span<const std::size_t> support) const = 0;
  virtual std::size_t matrix_rank(const DenseMatrix& b) const = 0;

 protected:
  explicit ControllabilityRanker(std::size_t n) : n_(n) {}

 private:
  std::size_t n_;
};

// Throws InvalidInput if A is not square, and for kPbh if A's eigenvalues are
// not separated by opts.gap_threshold.
std::unique_ptr<ControllabilityRanker> make_ranker(const DenseMatrix& a, RankBackend backend,
                                                   const RankOptions& opts = {});
std::unique_ptr<ControllabilityRanker> make_ranker(const RationalMatrix& a, RankBackend backend,
                                                   const RankOptions& opts = {});

}  // namespace minctrl

#endif  // MINCTRL_RANKER_HPP
