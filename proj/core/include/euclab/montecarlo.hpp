#ifndef EUCLAB_MONTECARLO_HPP
#define EUCLAB_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "euclab/estimator.hpp"
#include "euclab/factorpat.hpp"
#include "euclab/field.hpp"
#include "euclab/poly.hpp"

namespace euclab {

/// Sample i uses its own stream SplitMix64(mix64(seed ^ mix64(i))) and draws
/// s_1, ..., s_d in that order, each uniform in [0, q) by rejection. The
/// result is the ascending coefficient array of a monic degree-d f.
void sample_coefficients(const FieldCtx& ctx, std::size_t d, std::uint64_t seed, std::uint64_t index,
                         std::vector<FieldElem>& out);

enum class SamplingMode {
  Random,     // i.i.d. uniform draws, with replacement
  Enumerate,  // sample i is enumerate_monic(ctx, d, i); requires n <= q^d
};

struct SampleReport {
  u64 q = 0;
  std::size_t e = 0;
  std::size_t d = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::Random;
  FactorProfile profile;
  MainTerms main;

  std::uint64_t sum_gcd_degree = 0;
  std::uint64_t coprime_count = 0;
  std::uint64_t generic_count = 0;

  Rational mu;     // mean deg gcd(g, f)
  Rational beta;   // fraction with gcd 1
  Rational gamma;  // fraction generic
  std::optional<Rational> eps1_rel;  // |mu - E_g| / E_g, empty when E_g = 0
  Rational eps1_abs;                 // |mu - E_g|
  std::optional<Rational> eps2;      // |beta - P0| / P0, empty when P0 = 0
};

/// Requires n >= 1 and g monic with 1 <= d < deg g.
SampleReport monte_carlo(const FieldCtx& ctx, const Poly& g, std::size_t d, std::uint64_t n, std::uint64_t seed,
                         SamplingMode mode = SamplingMode::Random);

}  // namespace euclab

#endif  // EUCLAB_MONTECARLO_HPP
