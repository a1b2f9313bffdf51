#include "minctrl/greedy.hpp"

#include <algorithm>
#include <optional>

#include "minctrl/random.hpp"

namespace minctrl {

std::vector<double> SolveResult::input_vector() const {
  std::vector<double> b(n, 0.0);
  for (std::size_t k = 0; k < support.size(); ++k) b[support[k]] = values[k];
  return b;
}

namespace {

struct Candidate {
  std::size_t index = 0;
  double value = 0.0;
  std::size_t rank = 0;
};

SolveResult start(const ControllabilityRanker& ranker, const char* algorithm) {
  SolveResult r;
  r.algorithm = algorithm;
  r.backend = ranker.backend();
  r.n = ranker.dimension();
  return r;
}

void accept(SolveResult& r, const Candidate& c) {
  r.trace.push_back({r.trace.size() + 1, c.index, c.value, r.final_rank, c.rank});
  r.support.push_back(c.index);
  r.values.push_back(c.value);
  r.final_rank = c.rank;
}

void finish(SolveResult& r) { r.controllable = r.n > 0 && r.final_rank == r.n; }

}  // namespace

SolveResult randomized_greedy_vector(const ControllabilityRanker& ranker, std::uint64_t seed) {
  SolveResult result = start(ranker, "randomized");
  const std::size_t n = result.n;
  Engine engine(seed);
  std::vector<double> b(n, 0.0);
  result.final_rank = ranker.vector_rank(b);
  ++result.rank_evaluations;

  while (result.final_rank < n) {
    std::optional<Candidate> best;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] != 0.0) continue;
      const double x = standard_normal(engine);
      const std::size_t r = ranker.probe_rank(b, j, x);
      ++result.rank_evaluations;
      if (r > result.final_rank && (!best || r > best->rank)) best = Candidate{j, x, r};
    }
    if (!best) break;
    b[best->index] = best->value;
    accept(result, *best);
  }
  finish(result);
  return result;
}

SolveResult deterministic_greedy_vector(const ControllabilityRanker& ranker) {
  SolveResult result = start(ranker, "deterministic");
  const std::size_t n = result.n;
  const std::size_t probes = 2 * n + 1;
  std::vector<double> b(n, 0.0);
  result.final_rank = ranker.vector_rank(b);
  ++result.rank_evaluations;

  while (result.final_rank < n) {
    std::optional<Candidate> best;
    // A gain of n - rank cannot be beaten, and the scan order already
    // prefers the lowest index and value, so the scan may stop there.
    bool saturated = false;
    for (std::size_t j = 0; j < n && !saturated; ++j) {
      if (b[j] != 0.0) continue;
      for (std::size_t p = 1; p <= probes; ++p) {
        const double value = static_cast<double>(p);
        const std::size_t r = ranker.probe_rank(b, j, value);
        ++result.rank_evaluations;
        if (r > result.final_rank && (!best || r > best->rank)) best = Candidate{j, value, r};
        if (r == n) {
          saturated = true;
          break;
        }
      }
    }
    if (!best) break;
    b[best->index] = best->value;
    accept(result, *best);
  }
  finish(result);
  return result;
}

SolveResult greedy_diagonal(const ControllabilityRanker& ranker) {
  SolveResult result = start(ranker, "diagonal");
  const std::size_t n = result.n;
  std::vector<bool> chosen(n, false);
  std::vector<std::size_t> support;
  result.final_rank = 0;

  while (result.final_rank < n) {
    std::optional<Candidate> best;
    support.push_back(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (chosen[j]) continue;
      support.back() = j;
      const std::size_t r = ranker.diagonal_rank(support);
      ++result.rank_evaluations;
      if (r > result.final_rank && (!best || r > best->rank)) best = Candidate{j, 1.0, r};
      if (r == n) break;
    }
    support.pop_back();
    if (!best) break;
    chosen[best->index] = true;
    support.push_back(best->index);
    accept(result, *best);
  }
  finish(result);
  return result;
}

}  // namespace minctrl
