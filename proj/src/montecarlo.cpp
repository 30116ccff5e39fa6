#include "rauzy/montecarlo.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace rauzy {

bool McEstimate::consistent_with(double value, double k) const {
  return std::abs(estimate - value) <= k * std_error;
}

McEstimate McEstimate::scaled(double factor) const {
  McEstimate out = *this;
  out.estimate *= factor;
  out.std_error *= std::abs(factor);
  return out;
}

bool agree(const McEstimate& a, const McEstimate& b, double k) {
  const double sigma = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
  return std::abs(a.estimate - b.estimate) <= k * sigma;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 substream(std::uint64_t seed, std::size_t worker) {
  std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(worker) + 1));
  std::seed_seq seq{splitmix64(state), splitmix64(state), splitmix64(state), splitmix64(state)};
  return std::mt19937_64(seq);
}

McEstimate estimate_fraction(const McConfig& cfg, const McTrial& trial) {
  const std::size_t workers = cfg.workers == 0 ? 1 : cfg.workers;
  std::vector<std::size_t> hits(workers, 0);
  auto run = [&](std::size_t w) {
    std::size_t count = cfg.samples / workers + (w < cfg.samples % workers ? 1 : 0);
    auto rng = substream(cfg.seed, w);
    std::size_t h = 0;
    for (std::size_t i = 0; i < count; ++i)
      if (trial(rng)) ++h;
    hits[w] = h;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  McEstimate e;
  e.seed = cfg.seed;
  e.workers = workers;
  e.samples = cfg.samples;
  for (auto h : hits) e.hits += h;
  if (e.samples > 0) {
    const double n = static_cast<double>(e.samples);
    e.estimate = static_cast<double>(e.hits) / n;
    e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / n);
  }
  return e;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Rational uniform_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                          std::uint64_t resolution) {
  std::uniform_int_distribution<std::uint64_t> pick(1, resolution - 1);
  Rational t(Integer(std::to_string(pick(rng))), Integer(std::to_string(resolution)));
  t.canonicalize();
  return lo + t * (hi - lo);
}

std::uint64_t default_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("RAUZY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError("RAUZY_SEED is not an unsigned integer: " + std::string(env));
    }
  }
  return fallback;
}

nlohmann::json to_json(const McEstimate& e) {
  return {{"seed", e.seed},         {"workers", e.workers},     {"samples", e.samples},
          {"hits", e.hits},         {"estimate", e.estimate},   {"std_error", e.std_error},
          {"lower_3sigma", e.lower()}, {"upper_3sigma", e.upper()}};
}

}  // namespace rauzy
