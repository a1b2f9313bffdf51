#include "minctrl/ranker.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "minctrl/controllability.hpp"
#include "minctrl/error.hpp"

namespace minctrl {

std::string_view to_string(RankBackend b) {
  switch (b) {
    case RankBackend::kSvd:
      return "svd";
    case RankBackend::kPbh:
      return "pbh";
    case RankBackend::kExact:
      return "exact";
  }
  return "unknown";
}

RankBackend parse_rank_backend(std::string_view name) {
  if (name == "svd") return RankBackend::kSvd;
  if (name == "pbh") return RankBackend::kPbh;
  if (name == "exact") return RankBackend::kExact;
  throw InvalidInput("unknown rank backend '" + std::string(name) + "' (expected svd|pbh|exact)");
}

std::size_t ControllabilityRanker::probe_rank(std::span<const double> b, std::size_t index,
                                              double value) const {
  std::vector<double> probe(b.begin(), b.end());
  probe.at(index) += value;
  return vector_rank(probe);
}

namespace {

DenseMatrix unit_columns(std::size_t n, std::span<const std::size_t> support) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(support.size()));
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] >= n) throw InvalidInput("support index out of range");
    b(static_cast<Eigen::Index>(support[k]), static_cast<Eigen::Index>(k)) = 1.0;
  }
  return DenseMatrix(std::move(b));
}

void check_vector(std::size_t n, std::span<const double> b) {
  if (b.size() != n) throw InvalidInput("input vector length does not match A");
}

class SvdRanker final : public ControllabilityRanker {
 public:
  SvdRanker(DenseMatrix a, RankTolerance tol)
      : ControllabilityRanker(a.rows()), a_(std::move(a)), tol_(tol) {}

  RankBackend backend() const override { return RankBackend::kSvd; }

  std::size_t vector_rank(std::span<const double> b) const override {
    check_vector(dimension(), b);
    return rank_numeric(controllability_matrix(a_, DenseMatrix::column(b)), tol_);
  }
  std::size_t diagonal_rank(std::span<const std::size_t> support) const override {
    return matrix_rank(unit_columns(dimension(), support));
  }
  std::size_t matrix_rank(const DenseMatrix& b) const override {
    return rank_numeric(controllability_matrix(a_, b), tol_);
  }

 private:
  DenseMatrix a_;
  RankTolerance tol_;
};

class PbhRanker final : public ControllabilityRanker {
 public:
  PbhRanker(const DenseMatrix& a, const RankOptions& opts)
      : ControllabilityRanker(a.rows()),
        eig_(left_eigensystem(a, EigenOptions{opts.gap_threshold})),
        orth_tol_(opts.orth_tol) {
    if (!eig_.has_distinct_eigenvalues()) {
      throw InvalidInput("pbh backend needs eigenvalues separated by more than " +
                         std::to_string(opts.gap_threshold) + "; closest pair is " +
                         std::to_string(eig_.min_pairwise_gap) + " apart");
    }
  }

  RankBackend backend() const override { return RankBackend::kPbh; }

  std::size_t vector_rank(std::span<const double> b) const override {
    check_vector(dimension(), b);
    return pbh_controllability_rank(eig_, b, orth_tol_);
  }
  std::size_t diagonal_rank(std::span<const std::size_t> support) const override {
    return matrix_rank(unit_columns(dimension(), support));
  }
  std::size_t matrix_rank(const DenseMatrix& b) const override {
    return pbh_controllability_rank(eig_, b, orth_tol_);
  }

 private:
  EigenSystem eig_;
  std::optional<double> orth_tol_;
};

// Integer row basis kept in elimination form: row i vanishes at the pivots of
// rows 0..i-1, and every row is primitive (content 1).
class IntegerBasis {
 public:
  explicit IntegerBasis(std::size_t n) : n_(n) {}

  std::size_t size() const { return rows_.size(); }

  // Reduces v against the basis in place; true iff the remainder is nonzero.
  bool reduce(std::vector<mpz_class>& v) const {
    mpz_class g;
    mpz_class fb;
    mpz_class fv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      if (sgn(v[c]) == 0) continue;
      const auto& row = rows_[i];
      mpz_gcd(g.get_mpz_t(), row[c].get_mpz_t(), v[c].get_mpz_t());
      fb = row[c] / g;
      fv = v[c] / g;
      for (std::size_t k = 0; k < n_; ++k) {
        v[k] *= fb;
        if (sgn(row[k]) != 0) v[k] -= fv * row[k];
      }
      make_primitive(v);
    }
    return std::any_of(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) != 0; });
  }

  // Appends an already reduced nonzero vector.
  void push(std::vector<mpz_class> v) {
    make_primitive(v);
    std::size_t c = 0;
    while (sgn(v[c]) == 0) ++c;
    pivots_.push_back(c);
    rows_.push_back(std::move(v));
  }

  const std::vector<mpz_class>& row(std::size_t i) const { return rows_[i]; }

 private:
  static void make_primitive(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v) {
      if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g > 1) {
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }

  std::size_t n_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::size_t> pivots_;
};

// rank C(A, B) is the dimension of the smallest A-invariant subspace holding
// the columns of B. Each generator x contributes x, Ax, A^2x, ... until the
// first vector already in the span; applying A to the reduced remainder
// instead of the raw power spans the same space, because the span built so
// far is invariant. Works on A' = d A with d the lcm of A's denominators.
class ExactRanker final : public ControllabilityRanker {
 public:
  explicit ExactRanker(RationalMatrix a) : ControllabilityRanker(a.rows()) {
    const std::size_t n = dimension();
    mpz_class d = 1;
    for (const auto& q : a.row_major()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    a_int_.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      const Rational& q = a.row_major()[i];
      a_int_[i] = q.get_num() * (d / q.get_den());
    }
  }

  RankBackend backend() const override { return RankBackend::kExact; }

  std::size_t vector_rank(std::span<const double> b) const override {
    check_vector(dimension(), b);
    IntegerBasis basis(dimension());
    extend(basis, to_integer(std::vector<Rational>(b.begin(), b.end())));
    return basis.size();
  }

  std::size_t probe_rank(std::span<const double> b, std::size_t index,
                         double value) const override {
    check_vector(dimension(), b);
    if (index >= dimension()) throw InvalidInput("probe index out of range");
    // Sum taken over Q so that b + value e_index is exact.
    std::vector<Rational> q(b.begin(), b.end());
    q[index] += Rational(value);
    IntegerBasis basis(dimension());
    extend(basis, to_integer(q));
    return basis.size();
  }

  std::size_t diagonal_rank(std::span<const std::size_t> support) const override {
    const std::size_t n = dimension();
    for (auto j : support) {
      if (j >= n) throw InvalidInput("support index out of range");
    }
    if (support.empty()) return 0;
    // The greedy scan varies only the last index, so the subspace of the
    // prefix is reused across candidates.
    const std::span<const std::size_t> prefix = support.first(support.size() - 1);
    IntegerBasis basis(n);
    {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      if (!cache_ || !std::equal(prefix.begin(), prefix.end(), cached_prefix_.begin(),
                                 cached_prefix_.end())) {
        IntegerBasis fresh(n);
        for (auto j : prefix) extend(fresh, unit(j));
        cache_ = std::move(fresh);
        cached_prefix_.assign(prefix.begin(), prefix.end());
      }
      basis = *cache_;
    }
    extend(basis, unit(support.back()));
    return basis.size();
  }

  std::size_t matrix_rank(const DenseMatrix& b) const override {
    const std::size_t n = dimension();
    if (b.rows() != n) throw InvalidInput("input matrix B must have as many rows as A");
    IntegerBasis basis(n);
    for (std::size_t c = 0; c < b.cols() && basis.size() < n; ++c) {
      std::vector<Rational> q(n);
      for (std::size_t r = 0; r < n; ++r) q[r] = Rational(b(r, c));
      extend(basis, to_integer(q));
    }
    return basis.size();
  }

 private:
  std::vector<mpz_class> unit(std::size_t j) const {
    std::vector<mpz_class> e(dimension());
    e[j] = 1;
    return e;
  }

  static std::vector<mpz_class> to_integer(const std::vector<Rational>& q) {
    mpz_class scale = 1;
    for (const auto& x : q) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = q[i].get_num() * (scale / q[i].get_den());
    return out;
  }

  void extend(IntegerBasis& basis, std::vector<mpz_class> x) const {
    const std::size_t n = dimension();
    std::vector<mpz_class> next(n);
    while (basis.size() < n && basis.reduce(x)) {
      basis.push(x);
      const auto& r = basis.row(basis.size() - 1);
      for (std::size_t i = 0; i < n; ++i) {
        next[i] = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (sgn(a_int_[i * n + c]) != 0 && sgn(r[c]) != 0) next[i] += a_int_[i * n + c] * r[c];
        }
      }
      x.swap(next);
    }
  }

  std::vector<mpz_class> a_int_;

  mutable std::mutex cache_mutex_;
  mutable std::optional<IntegerBasis> cache_;
  mutable std::vector<std::size_t> cached_prefix_;
};

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw InvalidInput("system matrix A must be square");
}

}  // namespace

std::unique_ptr<ControllabilityRanker> make_ranker(const DenseMatrix& a, RankBackend backend,
                                                   const RankOptions& opts) {
  require_square(a.rows(), a.cols());
  switch (backend) {
    case RankBackend::kSvd:
      return std::make_unique<SvdRanker>(a, opts.svd_tolerance);
    case RankBackend::kPbh:
      return std::make_unique<PbhRanker>(a, opts);
    case RankBackend::kExact:
      return std::make_unique<ExactRanker>(RationalMatrix::from_dense(a));
  }
  throw InvalidInput("unknown rank backend");
}

std::unique_ptr<ControllabilityRanker> make_ranker(const RationalMatrix& a, RankBackend backend,
                                                   const RankOptions& opts) {
  require_square(a.rows(), a.cols());
  if (backend == RankBackend::kExact) return std::make_unique<ExactRanker>(a);
  return make_ranker(a.to_dense(), backend, opts);
}

}  // namespace minctrl
