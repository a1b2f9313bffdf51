#ifndef MINCTRL_EXPERIMENTS_HPP
#define MINCTRL_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "minctrl/dense_matrix.hpp"

namespace minctrl {

enum class SolverKind { kRandomized, kDeterministic };
enum class LogBase { kNatural, kTen };

struct ExperimentConfig {
  std::vector<std::size_t> n_values;
  std::size_t trials_per_n = 0;
  // Edge probability 2 log(n) / n unless a constant is given.
  std::optional<double> edge_probability;
  LogBase log_base = LogBase::kNatural;
  bool self_loops = true;
  double eigen_gap_threshold = 0.01;
  std::uint64_t seed = 1;
  SolverKind solver = SolverKind::kDeterministic;
  std::size_t max_regenerations_per_trial = 1000;
  std::size_t workers = 1;
  bool record_timing = false;

  // Throws InvalidInput on zero counts or a nonpositive threshold.
  void validate() const;
  double edge_probability_for(std::size_t n) const;
};

struct TrialRecord {
  std::size_t n = 0;
  std::size_t trial_index = 0;
  std::uint64_t graph_seed = 0;
  std::size_t regenerations_used = 0;
  bool accepted = false;
  std::size_t sparsity_found = 0;
  bool controllable = false;
  bool verified = false;
  double wall_time_seconds = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> records;
  // n -> (sparsity -> count), accepted trials only.
  std::map<std::size_t, std::map<std::size_t, std::size_t>> histogram;
  std::size_t rejected_graph_count = 0;

  std::size_t accepted_trials() const;
  // Fraction of accepted trials that ended controllable with sparsity <= k.
  double fraction_with_sparsity_at_most(std::size_t k) const;
};

// 0/1 adjacency: entry (i, j) is 1 with probability p, independently.
// Diagonal entries are drawn too unless self_loops is false.
DenseMatrix sample_er_digraph(std::size_t n, double p, std::uint64_t seed,
                              bool self_loops = true);

// Accept iff the closest pair of eigenvalues is farther apart than threshold.
// Throws NumericError if the eigensolver fails.
bool eigen_gap_filter(const DenseMatrix& a, double threshold);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace minctrl

#endif  // MINCTRL_EXPERIMENTS_HPP
