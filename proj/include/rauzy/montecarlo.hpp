#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include <nlohmann/json.hpp>

#include "rauzy/numerics.hpp"

namespace rauzy {

struct McConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
  std::size_t workers = 1;
};

/// Bernoulli-proportion estimate with its binomial standard error.
struct McEstimate {
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t samples = 0;
  std::size_t hits = 0;
  double estimate = 0.0;
  double std_error = 0.0;

  double lower(double k = 3.0) const { return estimate - k * std_error; }
  double upper(double k = 3.0) const { return estimate + k * std_error; }
  /// |estimate - value| <= k sigma.
  bool consistent_with(double value, double k = 3.0) const;
  McEstimate scaled(double factor) const;
};

/// Two estimates agree when their difference is within k combined sigmas.
bool agree(const McEstimate& a, const McEstimate& b, double k = 3.0);

/// Independent generator for one worker: mt19937_64 seeded from
/// splitmix64 applied to (seed, worker).
std::mt19937_64 substream(std::uint64_t seed, std::size_t worker);

std::uint64_t splitmix64(std::uint64_t& state);

/// A trial draws from the worker's generator and reports a hit. It must be
/// safe to call concurrently from several threads.
using McTrial = std::function<bool(std::mt19937_64&)>;

/// Runs cfg.samples trials split across cfg.workers threads. The result
/// depends only on (seed, samples, workers).
McEstimate estimate_fraction(const McConfig& cfg, const McTrial& trial);

/// Uniform double in [lo, hi).
double uniform(std::mt19937_64& rng, double lo, double hi);

/// Uniform rational k/resolution * (hi - lo) + lo with k in [1, resolution).
Rational uniform_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                          std::uint64_t resolution = std::uint64_t{1} << 30);

/// Seed from the RAUZY_SEED environment variable, or `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 20240101);

nlohmann::json to_json(const McEstimate& e);

}  // namespace rauzy
