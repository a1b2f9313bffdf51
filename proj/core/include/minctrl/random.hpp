#ifndef MINCTRL_RANDOM_HPP
#define MINCTRL_RANDOM_HPP

#include <cstdint>
#include <random>

namespace minctrl {

// All stochastic code draws from mt19937_64. Uniform and normal variates are
// derived from its raw output here rather than through <random>
// distributions, whose algorithms differ between standard libraries.
using Engine = std::mt19937_64;

// Uniform on [0, 1) with 53 random bits.
double uniform01(Engine& engine);
// Box-Muller, one variate per call.
double standard_normal(Engine& engine);
bool bernoulli(Engine& engine, double p);

std::uint64_t splitmix64(std::uint64_t x);
// Order-sensitive mix of several words into one seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

}  // namespace minctrl

#endif  // MINCTRL_RANDOM_HPP
