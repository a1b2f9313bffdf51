#include "minctrl/oracles.hpp"

#include <cstdint>
#include <functional>
#include <string>

#include "minctrl/controllability.hpp"
#include "minctrl/error.hpp"
#include "minctrl/rank.hpp"

namespace minctrl {
namespace {

// Visits every k-subset of {0..n-1} in lexicographic order until `visit`
// returns true. Returns whether a visit succeeded.
bool for_each_subset(std::size_t n, std::size_t k, std::uint64_t& counter,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ++counter;
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_guard(std::size_t size, std::size_t guard, const char* what, OracleOptions opts) {
  if (size > 63) throw GuardExceeded(std::string(what) + " size exceeds 63, cannot enumerate");
  if (size > guard && !opts.override_guard) {
    throw GuardExceeded(std::string(what) + " of size " + std::to_string(size) +
                        " exceeds the enumeration guard " + std::to_string(guard) +
                        "; pass the override to search anyway");
  }
}

template <typename Feasible>
OracleResult smallest_feasible(std::size_t n, Feasible feasible) {
  OracleResult result;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> found;
    const bool ok = for_each_subset(n, k, result.enumerated, [&](const auto& s) {
      if (!feasible(s)) return false;
      found = s;
      return true;
    });
    if (ok) {
      result.optimum = k;
      result.witness = std::move(found);
      return result;
    }
  }
  throw InvalidInput("no feasible support exists");
}

}  // namespace

OracleResult brute_force_hitting_set(const HittingSetInstance& inst, OracleOptions opts) {
  inst.validate();
  check_guard(inst.m, kHittingSetGuard, "hitting-set ground set", opts);
  std::vector<std::uint64_t> masks;
  for (const auto& s : inst.sets) {
    std::uint64_t mask = 0;
    for (auto e : s) mask |= std::uint64_t{1} << e;
    masks.push_back(mask);
  }
  OracleResult r = smallest_feasible(inst.m, [&](const std::vector<std::size_t>& s) {
    std::uint64_t chosen = 0;
    for (auto e : s) chosen |= std::uint64_t{1} << e;
    for (auto m : masks) {
      if ((m & chosen) == 0) return false;
    }
    return true;
  });
  if (!inst.is_hit_by(r.witness)) throw InternalError("hitting-set witness failed certification");
  return r;
}

OracleResult brute_force_min_vector_support(const RationalMatrix& v_rows, OracleOptions opts) {
  const std::size_t n = v_rows.cols();
  check_guard(n, kSupportGuard, "support search", opts);
  std::vector<std::uint64_t> masks;
  for (std::size_t r = 0; r < v_rows.rows(); ++r) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(v_rows(r, c)) != 0) mask |= std::uint64_t{1} << c;
    }
    if (mask == 0) throw InvalidInput("row " + std::to_string(r + 1) + " of V is zero");
    masks.push_back(mask);
  }
  OracleResult r = smallest_feasible(n, [&](const std::vector<std::size_t>& s) {
    std::uint64_t chosen = 0;
    for (auto e : s) chosen |= std::uint64_t{1} << e;
    for (auto m : masks) {
      if ((m & chosen) == 0) return false;
    }
    return true;
  });
  if (!pbh_support_test(v_rows, r.witness)) {
    throw InternalError("support witness failed the PBH support test");
  }
  return r;
}

OracleResult brute_force_min_diagonal_support(const RationalMatrix& v_rows, OracleOptions opts) {
  const std::size_t n = v_rows.cols();
  check_guard(n, kSupportGuard, "diagonal search", opts);
  for (std::size_t r = 0; r < v_rows.rows(); ++r) {
    if (v_rows.row(r) == RationalVector(n)) {
      throw InvalidInput("row " + std::to_string(r + 1) + " of V is zero");
    }
  }
  // Feasible iff no row v has v^T B == 0, with B the 0/1 diagonal matrix
  // selecting the candidate indices.
  auto feasible = [&](const std::vector<std::size_t>& s) {
    RationalMatrix b(n, n);
    for (auto j : s) b.set(j, j, 1);
    const RationalMatrix vb = v_rows * b;
    for (std::size_t r = 0; r < vb.rows(); ++r) {
      bool nonzero = false;
      for (std::size_t c = 0; c < n && !nonzero; ++c) nonzero = sgn(vb(r, c)) != 0;
      if (!nonzero) return false;
    }
    return true;
  };
  OracleResult r = smallest_feasible(n, feasible);
  if (!feasible(r.witness)) throw InternalError("diagonal witness failed certification");
  return r;
}

bool kalman_test(const DenseMatrix& a, const DenseMatrix& b, RankBackend backend,
                 const RankOptions& opts) {
  if (!a.is_square()) throw InvalidInput("system matrix A must be square");
  if (b.rows() != a.rows()) throw InvalidInput("input matrix B must have as many rows as A");
  return make_ranker(a, backend, opts)->matrix_rank(b) == a.rows();
}

bool kalman_test(const RationalMatrix& a, const RationalMatrix& b) {
  return rank_exact(controllability_matrix(a, b)) == a.rows();
}

}  // namespace minctrl
