#include "euclab/montecarlo.hpp"

#include "euclab/census.hpp"
#include "euclab/error.hpp"
#include "euclab/euclid.hpp"
#include "euclab/parallel.hpp"
#include "euclab/rng.hpp"

namespace euclab {

namespace {

constexpr std::uint64_t kChunk = 1 << 14;

struct Tally {
  std::uint64_t degree_sum = 0;
  std::uint64_t coprime = 0;
  std::uint64_t generic = 0;
};

}  // namespace

void sample_coefficients(const FieldCtx& ctx, std::size_t d, std::uint64_t seed, std::uint64_t index,
                         std::vector<FieldElem>& out) {
  SplitMix64 rng(mix64(seed ^ mix64(index)));
  out.assign(d + 1, FieldElem{});
  out[d] = ctx.one();
  for (std::size_t i = 1; i <= d; ++i) out[d - i] = FieldElem{rng.below(ctx.modulus())};
}

SampleReport monte_carlo(const FieldCtx& ctx, const Poly& g, std::size_t d, std::uint64_t n, std::uint64_t seed,
                         SamplingMode mode) {
  if (n == 0) throw Error(Errc::InvalidArgument, "sample size must be at least 1");
  if (g.is_zero() || !g.is_monic()) throw Error(Errc::InvalidArgument, "monte_carlo expects a monic g");
  if (d < 1 || d >= g.deg()) throw Error(Errc::DegreeOrder, "monte_carlo needs 1 <= d < deg g");
  if (mode == SamplingMode::Enumerate) {
    const auto space = monic_count(ctx.modulus(), d);
    if (space && n > *space) throw Error(Errc::InvalidArgument, "enumeration mode needs n <= q^d");
  }

  const Tally t = parallel_chunks(
      n, kChunk, Tally{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Tally local;
        EuclidWorkspace ws;
        std::vector<FieldElem> f;
        for (std::uint64_t i = begin; i < end; ++i) {
          if (mode == SamplingMode::Random) {
            sample_coefficients(ctx, d, seed, i, f);
          } else {
            const Poly p = enumerate_monic(ctx, d, i);
            f.assign(p.coeffs().begin(), p.coeffs().end());
          }
          const EuclidStats s = euclid_stats(ctx, g.coeffs(), f, ws);
          local.degree_sum += s.gcd_degree;
          local.coprime += s.gcd_degree == 0;
          local.generic += s.generic;
        }
        return local;
      },
      [](Tally a, const Tally& b) {
        a.degree_sum += b.degree_sum;
        a.coprime += b.coprime;
        a.generic += b.generic;
        return a;
      });

  SampleReport r;
  r.q = ctx.modulus();
  r.e = g.deg();
  r.d = d;
  r.n = n;
  r.seed = seed;
  r.mode = mode;
  r.profile = profile(ctx, g);
  r.main = main_terms(r.q, r.e, d, r.profile);
  r.sum_gcd_degree = t.degree_sum;
  r.coprime_count = t.coprime;
  r.generic_count = t.generic;
  const BigInt nn = n;
  r.mu = Rational(BigInt(t.degree_sum), nn);
  r.beta = Rational(BigInt(t.coprime), nn);
  r.gamma = Rational(BigInt(t.generic), nn);
  r.eps1_abs = abs(r.mu - r.main.E_g);
  if (r.main.E_g != 0) r.eps1_rel = r.eps1_abs / r.main.E_g;
  if (r.main.P0 != 0) r.eps2 = abs(r.beta - r.main.P0) / r.main.P0;
  return r;
}

}  // namespace euclab
