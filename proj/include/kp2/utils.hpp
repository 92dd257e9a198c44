#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>

namespace kp2 {

// <x> = sqrt(1 + x^2), computed exactly as written (no small-x shortcuts).
inline double jbr(double x) { return std::sqrt(1.0 + x * x); }

// Deterministic pairwise summation; order independent of chunking choices.
double pairwise_sum(std::span<const double> v);

std::uint64_t splitmix64(std::uint64_t x);

// Default seed, the bytes "KP2".
inline constexpr std::uint64_t kDefaultSeed = 0x4B5032;

// Seed for shard `i` of a campaign with master seed `seed`.
inline std::uint64_t shard_seed(std::uint64_t seed, int i) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull * (std::uint64_t(i) + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen_);
  }
  // Magnitude drawn log-uniformly from [lo, hi].
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  // Log-uniform magnitude with a random sign.
  double signed_log_uniform(double lo, double hi) {
    return sign() * log_uniform(lo, hi);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  double sign() { return (gen_() & 1u) ? 1.0 : -1.0; }
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Worker cap: KP2_THREADS if set, else hardware concurrency, at least 1.
int thread_count();

// Runs fn(0..n_shards-1), possibly in parallel. Shard decomposition is fixed
// so results are independent of the number of worker threads.
void parallel_shards(int n_shards, const std::function<void(int)>& fn);

}  // namespace kp2
