#include "minctrl/eigen_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>

#include "minctrl/error.hpp"
#include "minctrl/rank.hpp"

namespace minctrl {
namespace {

std::string hex_hash(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

std::size_t cluster_nullity(const Eigen::MatrixXd& a, std::complex<double> center, double radius) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd shifted = a.cast<std::complex<double>>();
  shifted.diagonal().array() -= center;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(shifted);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (!sv.allFinite()) throw NumericError("SVD failed while estimating eigenspace dimension");
  const double scale = std::max(1.0, a.norm());
  const double tol = 2.0 * radius + static_cast<double>(n) * scale * 1e2 *
                                        std::numeric_limits<double>::epsilon();
  std::size_t nullity = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= tol) ++nullity;
  }
  return nullity;
}

}  // namespace

std::vector<std::size_t> EigenSystem::geometric_multiplicities() const {
  std::vector<std::size_t> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) out.push_back(c.geometric);
  return out;
}

double min_pairwise_gap(std::span<const std::complex<double>> values) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      gap = std::min(gap, std::abs(values[i] - values[j]));
    }
  }
  return gap;
}

EigenSystem left_eigensystem(const DenseMatrix& a, EigenOptions opts) {
  if (!a.is_square()) throw InvalidInput("left_eigensystem requires a square matrix");
  if (!(opts.gap_threshold > 0.0)) throw InvalidInput("gap threshold must be positive");
  const Eigen::Index n = static_cast<Eigen::Index>(a.rows());

  EigenSystem out;
  out.gap_threshold = opts.gap_threshold;
  if (n == 0) {
    out.min_pairwise_gap = std::numeric_limits<double>::infinity();
    return out;
  }

  // Right eigenvectors of A^T are left eigenvectors of A.
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a.eigen().transpose(), true);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigensolver did not converge for matrix " + hex_hash(a.hash()));
  }
  const Eigen::VectorXcd lambda = solver.eigenvalues();
  Eigen::MatrixXcd w = solver.eigenvectors();
  if (!lambda.allFinite() || !w.allFinite()) {
    throw NumericError("eigensolver produced non-finite output for matrix " + hex_hash(a.hash()));
  }

  out.eigenvalues.assign(lambda.data(), lambda.data() + n);
  out.left_eigenvectors.resize(n, n);
  const Eigen::MatrixXcd ac = a.eigen().cast<std::complex<double>>();
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXcd v = w.col(i);
    const double norm = v.norm();
    if (norm > 0.0) v /= norm;
    out.left_eigenvectors.row(i) = v.transpose();
    const double residual = (v.transpose() * ac - lambda(i) * v.transpose()).norm();
    out.max_residual = std::max(out.max_residual, residual);
  }
  out.min_pairwise_gap = min_pairwise_gap(out.eigenvalues);

  std::vector<std::size_t> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < parent.size(); ++i) {
    for (std::size_t j = i + 1; j < parent.size(); ++j) {
      if (std::abs(out.eigenvalues[i] - out.eigenvalues[j]) <= opts.gap_threshold) {
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i) groups[find_root(parent, i)].push_back(i);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    EigenCluster c;
    c.algebraic = g.size();
    for (auto i : g) c.center += out.eigenvalues[i];
    c.center /= static_cast<double>(g.size());
    if (g.size() == 1) {
      c.geometric = 1;
    } else {
      double radius = 0.0;
      for (auto i : g) radius = std::max(radius, std::abs(out.eigenvalues[i] - c.center));
      c.geometric = std::clamp<std::size_t>(cluster_nullity(a.eigen(), c.center, radius), 1,
                                            g.size());
    }
    out.clusters.push_back(c);
  }
  return out;
}

std::size_t pbh_controllability_rank(const EigenSystem& eig, std::span<const double> b,
                                     std::optional<double> orth_tol) {
  if (b.size() != eig.size()) throw InvalidInput("input vector length does not match A");
  return pbh_controllability_rank(eig, DenseMatrix::column(b), orth_tol);
}

std::size_t pbh_controllability_rank(const EigenSystem& eig, const DenseMatrix& b,
                                     std::optional<double> orth_tol) {
  if (b.rows() != eig.size()) throw InvalidInput("input matrix rows do not match A");
  if (!eig.has_distinct_eigenvalues()) {
    throw InvalidInput("PBH eigenvector count needs distinct eigenvalues (min gap " +
                       std::to_string(eig.min_pairwise_gap) + " <= threshold " +
                       std::to_string(eig.gap_threshold) + ")");
  }
  const double tol = orth_tol ? *orth_tol : 1e-8 * b.eigen().norm();
  if (orth_tol && !(tol > 0.0)) throw InvalidInput("orthogonality tolerance must be positive");
  const Eigen::MatrixXcd projections = eig.left_eigenvectors * b.eigen().cast<std::complex<double>>();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < projections.rows(); ++i) {
    if (projections.row(i).norm() > tol) ++rank;
  }
  return rank;
}

bool pbh_support_test(const RationalMatrix& v_rows, std::span<const std::size_t> support) {
  for (auto idx : support) {
    if (idx >= v_rows.cols()) throw InvalidInput("support index out of range");
  }
  for (std::size_t r = 0; r < v_rows.rows(); ++r) {
    const bool hit = std::any_of(support.begin(), support.end(),
                                 [&](std::size_t c) { return sgn(v_rows(r, c)) != 0; });
    if (!hit) return false;
  }
  return true;
}

bool is_vector_controllable_possible(const EigenSystem& eig) {
  return std::all_of(eig.clusters.begin(), eig.clusters.end(),
                     [](const EigenCluster& c) { return c.geometric == 1; });
}

RationalMatrix left_eigenvectors_exact(const RationalMatrix& a,
                                       std::span<const Rational> eigenvalues) {
  if (!a.is_square()) throw InvalidInput("left_eigenvectors_exact requires a square matrix");
  const std::size_t n = a.rows();
  const RationalMatrix at = a.transpose();
  std::vector<RationalVector> rows;
  rows.reserve(eigenvalues.size());
  for (const auto& lambda : eigenvalues) {
    RationalMatrix shifted = at;
    for (std::size_t i = 0; i < n; ++i) shifted.set(i, i, shifted(i, i) - lambda);
    auto basis = nullspace_exact(shifted);
    if (basis.size() != 1) {
      throw InvalidInput("eigenvalue " + to_string(lambda) + " has a left null space of dimension " +
                         std::to_string(basis.size()));
    }
    RationalVector v = std::move(basis.front());
    const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
    const Rational scale = 1 / *lead;
    for (auto& x : v) x *= scale;
    rows.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(rows);
}

}  // namespace minctrl
