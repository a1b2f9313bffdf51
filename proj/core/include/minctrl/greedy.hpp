#ifndef MINCTRL_GREEDY_HPP
#define MINCTRL_GREEDY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "minctrl/dense_matrix.hpp"
#include "minctrl/ranker.hpp"
#include "minctrl/rational_matrix.hpp"

namespace minctrl {

struct TraceStep {
  std::size_t step = 0;
  std::size_t index = 0;
  double value = 0.0;
  std::size_t rank_before = 0;
  std::size_t rank_after = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Output of every greedy solver. Indices are zero-based.
struct SolveResult {
  std::string algorithm;
  RankBackend backend = RankBackend::kExact;
  std::size_t n = 0;
  std::vector<std::size_t> support;  // in order of selection
  std::vector<double> values;        // parallel to support
  std::size_t final_rank = 0;
  bool controllable = false;
  std::vector<TraceStep> trace;
  std::size_t rank_evaluations = 0;

  std::size_t sparsity() const { return support.size(); }
  // Dense input vector (vector solvers) or diagonal of B (diagonal solver).
  std::vector<double> input_vector() const;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 20140318;

// Randomized greedy: each while-iteration draws an independent standard
// normal for every zero entry, keeps the index with the largest rank gain
// (lowest index on ties), and stops once no index increases the rank.
SolveResult randomized_greedy_vector(const ControllabilityRanker& ranker, std::uint64_t seed);

// Deterministic greedy: probes every zero index with values 1..2n+1 and keeps
// the (index, value) with the largest rank gain, lowest index then lowest
// value on ties.
SolveResult deterministic_greedy_vector(const ControllabilityRanker& ranker);

// Diagonal greedy: adds unit diagonal entries of B one at a time.
SolveResult greedy_diagonal(const ControllabilityRanker& ranker);

template <typename Matrix>
SolveResult randomized_greedy_vector(const Matrix& a, std::uint64_t seed, RankBackend backend,
                                     const RankOptions& opts = {}) {
  return randomized_greedy_vector(*make_ranker(a, backend, opts), seed);
}

template <typename Matrix>
SolveResult deterministic_greedy_vector(const Matrix& a, RankBackend backend,
                                        const RankOptions& opts = {}) {
  return deterministic_greedy_vector(*make_ranker(a, backend, opts));
}

template <typename Matrix>
SolveResult greedy_diagonal(const Matrix& a, RankBackend backend, const RankOptions& opts = {}) {
  return greedy_diagonal(*make_ranker(a, backend, opts));
}

}  // namespace minctrl

#endif  // MINCTRL_GREEDY_HPP
