#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include <euclab/census.hpp>
#include <euclab/error.hpp>
#include <euclab/montecarlo.hpp>

#include "test_support.hpp"

namespace euclab {
namespace {

TEST(MonteCarlo, DeterministicForFixedSeed) {
  const FieldCtx F(67);
  const Poly g = build_with_pattern(F, parse_pattern("1x1,6"), 3);
  const SampleReport a = monte_carlo(F, g, 3, 20000, 42);
  const SampleReport b = monte_carlo(F, g, 3, 20000, 42);
  EXPECT_EQ(a.sum_gcd_degree, b.sum_gcd_degree);
  EXPECT_EQ(a.coprime_count, b.coprime_count);
  EXPECT_EQ(a.generic_count, b.generic_count);
  const SampleReport c = monte_carlo(F, g, 3, 20000, 43);
  EXPECT_NE(std::tie(a.sum_gcd_degree, a.coprime_count, a.generic_count),
            std::tie(c.sum_gcd_degree, c.coprime_count, c.generic_count));
}

TEST(MonteCarlo, SampleStreamIsDocumentedSplitMix) {
  const FieldCtx F(67);
  std::vector<FieldElem> s;
  sample_coefficients(F, 3, 9, 17, s);
  SplitMix64 rng(mix64(9 ^ mix64(17)));
  // Ascending coefficients of f; s_i sits at T^{d-i} and is drawn i-th.
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[3].value, 1u);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(s[3 - i].value, rng.below(67));
}

TEST(MonteCarlo, EnumerationModeReproducesCensus) {
  const FieldCtx F(5);
  SplitMix64 rng(8);
  for (int rep = 0; rep < 5; ++rep) {
    const Poly g = testing::random_monic(F, rng, 5);
    const CensusReport c = exact_distribution(F, g, 3);
    const SampleReport s = monte_carlo(F, g, 3, 125, 0, SamplingMode::Enumerate);
    EXPECT_EQ(s.mu, c.E_X);
    EXPECT_EQ(s.beta, c.P0);
    EXPECT_EQ(s.gamma, Rational(c.generic_count, 125));
  }
  EXPECT_THROW(monte_carlo(F, Poly::from_ints(F, {0, 0, 0, 1}), 2, 26, 0, SamplingMode::Enumerate), Error);
  EXPECT_THROW(monte_carlo(F, Poly::from_ints(F, {0, 0, 0, 1}), 2, 0, 0), Error);
}

TEST(MonteCarlo, ConvergesToCensusValues) {
  const FieldCtx F(3);
  const SampleReport s = monte_carlo(F, Poly::from_ints(F, {0, 0, 0, 1}), 2, 200000, 5);
  EXPECT_NEAR(to_double(s.mu), 4.0 / 9, 0.01);
  EXPECT_NEAR(to_double(s.beta), 2.0 / 3, 0.01);
  EXPECT_NEAR(to_double(s.gamma), 4.0 / 9, 0.01);
  EXPECT_LE(s.gamma, s.beta);
  EXPECT_EQ(s.main.E_g, Rational(1, 3));
  EXPECT_EQ(*s.eps2, abs(s.beta - s.main.P0) / s.main.P0);
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  const FieldCtx F(127);
  const Poly g = build_with_pattern(F, parse_pattern("1x3,6"), 1);
  ::setenv("EUCLAB_THREADS", "1", 1);
  const SampleReport a = monte_carlo(F, g, 4, 50000, 7);
  ::setenv("EUCLAB_THREADS", "3", 1);
  const SampleReport b = monte_carlo(F, g, 4, 50000, 7);
  ::unsetenv("EUCLAB_THREADS");
  EXPECT_EQ(a.sum_gcd_degree, b.sum_gcd_degree);
  EXPECT_EQ(a.coprime_count, b.coprime_count);
  EXPECT_EQ(a.generic_count, b.generic_count);
}

TEST(MonteCarlo, BinomialSpreadOfBeta) {
  const FieldCtx F(67);
  const Poly g = build_with_pattern(F, parse_pattern("1x5,2"), 2);
  constexpr int kSeeds = 30;
  constexpr std::uint64_t n = 100000;
  double sum = 0, sum2 = 0;
  for (int s = 0; s < kSeeds; ++s) {
    const double b = to_double(monte_carlo(F, g, 3, n, 1000 + s).beta);
    sum += b;
    sum2 += b * b;
  }
  const double mean = sum / kSeeds;
  const double sd = std::sqrt((sum2 - kSeeds * mean * mean) / (kSeeds - 1));
  const double expected = std::sqrt(mean * (1 - mean) / n);
  EXPECT_GT(sd, expected / 2);
  EXPECT_LT(sd, expected * 2);
}

TEST(MonteCarlo, ErrorsAreOptionalWhenDenominatorsVanish) {
  const FieldCtx F(5);
  // No factor of degree <= d: E_g = 0 so the relative error is undefined.
  const Poly g = build_with_pattern(F, parse_pattern("3"), 1);
  const SampleReport s = monte_carlo(F, g, 2, 100, 1);
  EXPECT_FALSE(s.eps1_rel.has_value());
  EXPECT_EQ(s.eps1_abs, s.mu);
  EXPECT_EQ(s.beta, Rational(1));
}

}  // namespace
}  // namespace euclab
