#ifndef MINCTRL_EIGEN_SYSTEM_HPP
#define MINCTRL_EIGEN_SYSTEM_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "minctrl/dense_matrix.hpp"
#include "minctrl/rational_matrix.hpp"

namespace minctrl {

inline constexpr double kDefaultGapThreshold = 0.01;

struct EigenCluster {
  std::complex<double> center;
  std::size_t algebraic = 0;  // eigenvalues in the cluster
  std::size_t geometric = 0;  // numerical dimension of the eigenspace
};

/// Eigenvalues and unit-norm left eigenvectors of a real square matrix.
///
/// Row i of `left_eigenvectors` satisfies v^T A = lambda_i v^T. Eigenvalues
/// closer than `gap_threshold` are grouped into one cluster and that
/// cluster's geometric multiplicity is estimated from the nullity of
/// (A - center I).
struct EigenSystem {
  std::vector<std::complex<double>> eigenvalues;
  Eigen::MatrixXcd left_eigenvectors;
  double min_pairwise_gap = 0.0;
  double gap_threshold = kDefaultGapThreshold;
  double max_residual = 0.0;
  std::vector<EigenCluster> clusters;

  std::size_t size() const { return eigenvalues.size(); }
  bool has_distinct_eigenvalues() const { return min_pairwise_gap > gap_threshold; }
  std::vector<std::size_t> geometric_multiplicities() const;
};

struct EigenOptions {
  double gap_threshold = kDefaultGapThreshold;
};

// Throws InvalidInput on non-square input and NumericError (message carries
// the matrix hash) when the eigensolver does not converge.
EigenSystem left_eigensystem(const DenseMatrix& a, EigenOptions opts = {});

// Minimum |lambda_i - lambda_j| over i != j; +inf for fewer than two values.
double min_pairwise_gap(std::span<const std::complex<double>> values);

// Number of left eigenvectors v with |v^T b| > orth_tol, i.e. the rank of
// C(A, b) when the eigenvalues are distinct. orth_tol defaults to
// 1e-8 * ||b||. Throws InvalidInput if the spectrum is not separated.
std::size_t pbh_controllability_rank(const EigenSystem& eig, std::span<const double> b,
                                     std::optional<double> orth_tol = std::nullopt);

// Matrix-input form: counts v with ||v^T B|| > orth_tol (default 1e-8 * ||B||_F).
std::size_t pbh_controllability_rank(const EigenSystem& eig, const DenseMatrix& b,
                                     std::optional<double> orth_tol = std::nullopt);

// True iff every row of v_rows has a nonzero entry inside `support`.
bool pbh_support_test(const RationalMatrix& v_rows, std::span<const std::size_t> support);

// True iff every eigenspace is one-dimensional.
bool is_vector_controllable_possible(const EigenSystem& eig);

// Exact left eigenvectors for known rational eigenvalues: row i spans the
// left null space of (A - lambda_i I), scaled so its first nonzero entry is 1.
// Throws InvalidInput when that null space is not one-dimensional.
RationalMatrix left_eigenvectors_exact(const RationalMatrix& a,
                                       std::span<const Rational> eigenvalues);

}  // namespace minctrl

#endif  // MINCTRL_EIGEN_SYSTEM_HPP
