#include <benchmark/benchmark.h>

#include <vector>

#include "minctrl/controllability.hpp"
#include "minctrl/eigen_system.hpp"
#include "minctrl/experiments.hpp"
#include "minctrl/greedy.hpp"
#include "minctrl/random.hpp"
#include "minctrl/rank.hpp"
#include "minctrl/reductions.hpp"

namespace {

using namespace minctrl;

// Sets {i, i+1 mod m} over m elements; N = 2m + 1.
HittingSetInstance cycle_instance(std::size_t m) {
  HittingSetInstance inst;
  inst.m = m;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> s{i, (i + 1) % m};
    if (s[0] > s[1]) std::swap(s[0], s[1]);
    inst.sets.push_back(s);
  }
  return inst;
}

DenseMatrix er_matrix(std::size_t n, std::uint64_t seed) {
  ExperimentConfig cfg;
  for (std::uint64_t s = seed;; ++s) {
    DenseMatrix a = sample_er_digraph(n, cfg.edge_probability_for(n), s);
    if (eigen_gap_filter(a, cfg.eigen_gap_threshold)) return a;
  }
}

void BM_RankExactKrylov(benchmark::State& state) {
  const auto red = build_reduction(cycle_instance(static_cast<std::size_t>(state.range(0))));
  const std::size_t n = red.a.rows();
  RationalVector b(n);
  b[0] = 1;
  b[n - 1] = 1;
  const RationalMatrix c = controllability_matrix(red.a, RationalMatrix(n, 1, b));
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(c));
}
BENCHMARK(BM_RankExactKrylov)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_RankSvd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix a = er_matrix(n, 1);
  const std::vector<double> ones(n, 1.0);
  const DenseMatrix c = controllability_matrix(a, DenseMatrix::column(ones));
  for (auto _ : state) benchmark::DoNotOptimize(rank_numeric(c));
}
BENCHMARK(BM_RankSvd)->Arg(10)->Arg(30)->Arg(50)->Unit(benchmark::kMicrosecond);

void BM_RankPbh(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix a = er_matrix(n, 1);
  const EigenSystem eig = left_eigensystem(a);
  const std::vector<double> ones(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(pbh_controllability_rank(eig, std::span<const double>(ones)));
}
BENCHMARK(BM_RankPbh)->Arg(10)->Arg(30)->Arg(50)->Unit(benchmark::kMicrosecond);

void BM_DeterministicGreedyReduction(benchmark::State& state) {
  const auto red = build_reduction(cycle_instance(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(deterministic_greedy_vector(red.a, RankBackend::kExact));
  }
}
BENCHMARK(BM_DeterministicGreedyReduction)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ErTrial(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.n_values = {static_cast<std::size_t>(state.range(0))};
  cfg.trials_per_n = 1;
  cfg.solver = SolverKind::kRandomized;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(run_experiment(cfg));
  }
}
BENCHMARK(BM_ErTrial)->Arg(10)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
