#include <gtest/gtest.h>

#include <set>

#include "rauzy/montecarlo.hpp"

namespace rauzy {
namespace {

bool below_third(std::mt19937_64& rng) { return uniform(rng, 0.0, 1.0) < 1.0 / 3.0; }

TEST(MonteCarlo, DeterministicPerSeedAndWorkers) {
  for (std::size_t w : {1, 3, 4}) {
    const McConfig cfg{7, 50001, w};
    const auto a = estimate_fraction(cfg, below_third);
    const auto b = estimate_fraction(cfg, below_third);
    EXPECT_EQ(a.hits, b.hits);
    EXPECT_EQ(a.samples, 50001u);
    EXPECT_EQ(a.workers, w);
    EXPECT_TRUE(a.consistent_with(1.0 / 3.0));
  }
  EXPECT_NE(estimate_fraction({7, 50000, 1}, below_third).hits, estimate_fraction({8, 50000, 1}, below_third).hits);
}

TEST(MonteCarlo, SubstreamsDiffer) {
  std::set<std::uint64_t> firsts;
  for (std::size_t w = 0; w < 64; ++w) firsts.insert(substream(11, w)());
  EXPECT_EQ(firsts.size(), 64u);
  EXPECT_EQ(substream(11, 3)(), substream(11, 3)());
}

TEST(MonteCarlo, StandardError) {
  const auto e = estimate_fraction({9, 40000, 2}, below_third);
  const double p = e.estimate;
  EXPECT_DOUBLE_EQ(e.std_error, std::sqrt(p * (1 - p) / 40000.0));
  EXPECT_NEAR(e.upper() - e.estimate, 3 * e.std_error, 1e-15);
  const auto s = e.scaled(2.0);
  EXPECT_DOUBLE_EQ(s.estimate, 2 * p);
  EXPECT_NEAR(s.std_error, 2 * e.std_error, 1e-15);
  EXPECT_TRUE(agree(e, estimate_fraction({10, 40000, 3}, below_third)));
}

TEST(MonteCarlo, UniformRationalIsInside) {
  auto rng = substream(12, 0);
  for (int k = 0; k < 1000; ++k) {
    const Rational x = uniform_rational(rng, 2, 5);
    EXPECT_GT(x, 2);
    EXPECT_LT(x, 5);
  }
}

TEST(MonteCarlo, DefaultSeedFromEnvironment) {
  ::setenv("RAUZY_SEED", "77", 1);
  EXPECT_EQ(default_seed(), 77u);
  ::setenv("RAUZY_SEED", "x1", 1);
  EXPECT_THROW(default_seed(), DomainError);
  ::unsetenv("RAUZY_SEED");
  EXPECT_EQ(default_seed(5), 5u);
}

}  // namespace
}  // namespace rauzy
