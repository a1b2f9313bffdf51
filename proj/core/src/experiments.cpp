#include "minctrl/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "minctrl/eigen_system.hpp"
#include "minctrl/error.hpp"
#include "minctrl/greedy.hpp"
#include "minctrl/random.hpp"
#include "minctrl/ranker.hpp"

namespace minctrl {

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw InvalidInput("n_values must not be empty");
  for (auto n : n_values) {
    if (n == 0) throw InvalidInput("every n must be positive");
  }
  if (trials_per_n == 0) throw InvalidInput("trials_per_n must be positive");
  if (!(eigen_gap_threshold > 0.0)) throw InvalidInput("eigen_gap_threshold must be positive");
  if (workers == 0) throw InvalidInput("workers must be positive");
  if (edge_probability && !(*edge_probability >= 0.0 && *edge_probability <= 1.0)) {
    throw InvalidInput("edge_probability must lie in [0, 1]");
  }
}

double ExperimentConfig::edge_probability_for(std::size_t n) const {
  if (edge_probability) return *edge_probability;
  const double x = static_cast<double>(n);
  const double lg = log_base == LogBase::kNatural ? std::log(x) : std::log10(x);
  return std::clamp(2.0 * lg / x, 0.0, 1.0);
}

std::size_t ExperimentReport::accepted_trials() const {
  std::size_t total = 0;
  for (const auto& r : records) total += r.accepted ? 1 : 0;
  return total;
}

double ExperimentReport::fraction_with_sparsity_at_most(std::size_t k) const {
  std::size_t hits = 0;
  std::size_t accepted = 0;
  for (const auto& r : records) {
    if (!r.accepted) continue;
    ++accepted;
    if (r.controllable && r.sparsity_found <= k) ++hits;
  }
  return accepted == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(accepted);
}

DenseMatrix sample_er_digraph(std::size_t n, double p, std::uint64_t seed, bool self_loops) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  Engine engine(seed);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Draw for every ordered pair so the stream is independent of the flag.
      const bool edge = bernoulli(engine, p);
      if (i == j && !self_loops) continue;
      if (edge) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
    }
  }
  return DenseMatrix(std::move(a));
}

bool eigen_gap_filter(const DenseMatrix& a, double threshold) {
  if (!(threshold > 0.0)) throw InvalidInput("gap threshold must be positive");
  return left_eigensystem(a, EigenOptions{threshold}).has_distinct_eigenvalues();
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t n, std::size_t trial) {
  const auto t0 = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.n = n;
  rec.trial_index = trial;
  const std::uint64_t trial_seed = derive_seed(cfg.seed, n, trial);
  const double p = cfg.edge_probability_for(n);
  RankOptions opts;
  opts.gap_threshold = cfg.eigen_gap_threshold;

  for (std::size_t attempt = 0; attempt <= cfg.max_regenerations_per_trial; ++attempt) {
    const std::uint64_t graph_seed = derive_seed(trial_seed, attempt, 0);
    const DenseMatrix a = sample_er_digraph(n, p, graph_seed, cfg.self_loops);
    std::unique_ptr<ControllabilityRanker> ranker;
    try {
      if (eigen_gap_filter(a, cfg.eigen_gap_threshold)) {
        ranker = make_ranker(a, RankBackend::kPbh, opts);
      }
    } catch (const NumericError&) {
    } catch (const InvalidInput&) {
    }
    if (!ranker) {
      ++rec.regenerations_used;
      continue;
    }
    rec.graph_seed = graph_seed;
    rec.accepted = true;
    const SolveResult sol = cfg.solver == SolverKind::kRandomized
                                ? randomized_greedy_vector(*ranker, graph_seed)
                                : deterministic_greedy_vector(*ranker);
    rec.sparsity_found = sol.sparsity();
    rec.controllable = sol.controllable;
    // Re-check the returned b against a freshly computed eigensystem.
    const EigenSystem check = left_eigensystem(a, EigenOptions{cfg.eigen_gap_threshold});
    rec.verified = sol.controllable && pbh_controllability_rank(check, sol.input_vector()) == n;
    break;
  }
  rec.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport report;
  report.config = cfg;

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (auto n : cfg.n_values) {
    for (std::size_t t = 0; t < cfg.trials_per_n; ++t) jobs.emplace_back(n, t);
  }
  report.records.resize(jobs.size());

  // Each trial derives its own seed, so the schedule cannot change results.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        report.records[i] = run_trial(cfg, jobs[i].first, jobs[i].second);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const std::size_t threads = std::min(cfg.workers, jobs.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& rec : report.records) {
    report.rejected_graph_count += rec.regenerations_used;
    if (rec.accepted) ++report.histogram[rec.n][rec.sparsity_found];
  }
  return report;
}

}  // namespace minctrl
