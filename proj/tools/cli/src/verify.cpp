#include <algorithm>
#include <functional>

#include <euclab/census.hpp>
#include <euclab/euclid.hpp>
#include <euclab/genlead.hpp>
#include <euclab/rng.hpp>
#include <euclab/symschur.hpp>

#include "euclab_cli/cli.hpp"

namespace euclab::cli {

namespace {

FieldElem draw(const FieldCtx& ctx, SplitMix64& rng) { return FieldElem{rng.below(ctx.modulus())}; }

Alphabet random_alphabet(const FieldCtx& ctx, SplitMix64& rng, std::size_t size) {
  Alphabet a;
  for (std::size_t i = 0; i < size; ++i) a.elements.push_back(draw(ctx, rng));
  return a;
}

Poly random_monic(const FieldCtx& ctx, SplitMix64& rng, std::size_t degree) {
  std::vector<FieldElem> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = draw(ctx, rng);
  c[degree] = ctx.one();
  return Poly(std::move(c));
}

std::size_t pick(SplitMix64& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

SuiteResult suite_cauchy(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"cauchy", trials ? trials : 500, 0, {}};
  const FieldCtx ctx(67);
  SplitMix64 rng(seed);
  constexpr std::size_t N = 12;
  for (std::size_t t = 0; t < r.trials; ++t) {
    const Alphabet A = random_alphabet(ctx, rng, pick(rng, 0, 5));
    const Alphabet B = random_alphabet(ctx, rng, pick(rng, 0, 5));
    const Alphabet AB = concat(A, B);
    bool ok = elementary(ctx, AB, N) == series_mul(ctx, elementary(ctx, A, N), elementary(ctx, B, N));
    ok = ok && complete(ctx, AB, N) == series_mul(ctx, complete(ctx, A, N), complete(ctx, B, N));
    ok = ok && s_difference(ctx, A, B, N) == s_difference_cauchy(ctx, A, B, N);
    if (!ok) fail(r, "trial " + std::to_string(t));
  }
  return r;
}

SuiteResult suite_lascoux(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"lascoux", trials ? trials : 100, 0, {}};
  const FieldCtx ctx(67);
  SplitMix64 rng(seed ^ 0x1A5C0);
  for (std::size_t t = 0; t < r.trials; ++t) {
    std::vector<std::size_t> J(3);
    for (auto& j : J) j = pick(rng, 0, 4);
    const std::size_t k = pick(rng, 0, 3);
    const Alphabet A = random_alphabet(ctx, rng, 4);
    const Alphabet B = random_alphabet(ctx, rng, 2);
    if (!lascoux_148_check(ctx, J, k, A, B, draw(ctx, rng))) fail(r, "trial " + std::to_string(t));
  }
  return r;
}

SuiteResult suite_newton(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"newton", trials ? trials : 200, 0, {}};
  const FieldCtx ctx(67);
  SplitMix64 rng(seed ^ 0x4E3);
  constexpr std::size_t N = 10;
  for (std::size_t t = 0; t < r.trials; ++t) {
    const auto [S, L] = complete_and_elementary(ctx, random_alphabet(ctx, rng, pick(rng, 0, 6)), N);
    for (std::size_t i = 1; i <= N; ++i) {
      FieldElem acc = ctx.zero();
      for (std::size_t j = 0; j <= i; ++j) {
        const FieldElem term = ctx.mul(L.at(j), S.at(i - j));
        acc = j % 2 ? ctx.sub(acc, term) : ctx.add(acc, term);
      }
      if (acc.value != 0) {
        fail(r, "trial " + std::to_string(t) + " degree " + std::to_string(i));
        break;
      }
    }
  }
  return r;
}

SuiteResult suite_roots(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"roots", trials ? trials : 200, 0, {}};
  const FieldCtx ctx(67);
  SplitMix64 rng(seed ^ 0x2007);
  for (std::size_t t = 0; t < r.trials; ++t) {
    const Alphabet A = random_alphabet(ctx, rng, pick(rng, 1, 7));
    const std::size_t e = A.size();
    // S^e(T - A) = sum_h S^{e-h}(-A) T^h.
    const SymSeries minus_a = s_difference(ctx, Alphabet{}, A, e);
    std::vector<FieldElem> c(e + 1);
    for (std::size_t h = 0; h <= e; ++h) c[h] = minus_a.at(e - h);
    if (Poly(std::move(c)) != from_roots(ctx, A.elements)) fail(r, "trial " + std::to_string(t));
  }
  return r;
}

SuiteResult suite_resultant(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"resultant", trials ? trials : 200, 0, {}};
  SplitMix64 rng(seed ^ 0x7E5);
  const u64 primes[] = {5, 67, 127};
  for (std::size_t t = 0; t < r.trials; ++t) {
    const FieldCtx ctx(primes[t % 3]);
    const std::size_t m = pick(rng, 1, 8);
    Poly g = random_monic(ctx, rng, m);
    Poly f = random_monic(ctx, rng, pick(rng, 1, m));
    if (t % 2) f = scale(ctx, f, FieldElem{1 + rng.below(ctx.modulus() - 1)});
    if (resultant_euclid(ctx, g, f) != resultant_sylvester(ctx, g, f)) fail(r, "trial " + std::to_string(t));
  }
  return r;
}

SuiteResult suite_leads(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"leads", 0, 0, {}};
  const std::size_t per_config = trials ? trials : 5;
  SplitMix64 rng(seed ^ 0x931);
  for (u64 q : {67, 127}) {
    const FieldCtx ctx(q);
    for (std::size_t e = 2; e <= 7; ++e) {
      for (std::size_t d = 1; d <= std::min<std::size_t>(4, e - 1); ++d) {
        for (std::size_t rep = 0; rep < per_config; ++rep) {
          const Poly g = random_monic(ctx, rng, e);
          const GenericLeadSet set = generic_lead(ctx, g, d);
          for (const auto& lead : set.leads) {
            ++r.trials;
            const std::size_t w = e - d + lead.k;
            MultiPoly::Exponents top(d, 0);
            top[lead.k - 1] = static_cast<std::uint16_t>(w);
            const bool ok = lead.poly.total_degree() == w && lead.poly.partial_degree(lead.k) == w &&
                            lead.poly.coefficient(top) == ctx.one() && lead.monic_scalar == ctx.one();
            if (!ok) {
              fail(r, "q=" + std::to_string(q) + " g=" + poly_format(g) + " d=" + std::to_string(d) + " k=" +
                          std::to_string(lead.k));
            }
          }
        }
      }
    }
  }
  return r;
}

SuiteResult suite_characterizations(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"characterizations", 0, 0, {}};
  const std::size_t per_config = trials ? trials : 3;
  SplitMix64 rng(seed ^ 0xC4A);
  const FieldCtx ctx(5);
  for (std::size_t e = 2; e <= 5; ++e) {
    for (std::size_t d = 1; d <= std::min<std::size_t>(3, e - 1); ++d) {
      for (std::size_t rep = 0; rep < per_config; ++rep) {
        const Poly g = rep == 0 ? Poly::monomial(ctx.one(), e) : random_monic(ctx, rng, e);
        const CharacterizationFlags f = verify_characterizations(ctx, g, d);
        r.trials += f.checked;
        if (!f.resultant_ok || !f.generic_ok.value_or(false)) fail(r, "g=" + poly_format(g) + ": " + f.first_failure);
      }
    }
  }
  return r;
}

SuiteResult suite_schur(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"schur", trials ? trials : 200, 0, {}};
  const FieldCtx ctx(67);
  SplitMix64 rng(seed ^ 0x5C4);
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < r.trials && attempt < 50 * r.trials; ++attempt) {
    const std::size_t e = pick(rng, 2, 6);
    const std::size_t d = pick(rng, 1, std::min<std::size_t>(3, e - 1));
    const std::size_t k = pick(rng, 1, d);
    const Alphabet A = random_alphabet(ctx, rng, e);
    const Alphabet B = random_alphabet(ctx, rng, d);
    const RemainderCalibration cal = calibrate_remainder(ctx, k, A, B);
    if (!cal.generic_prefix) continue;
    ++done;
    const FieldElem sign = validated_remainder_sign(e, d, k) > 0 ? ctx.one() : ctx.neg(ctx.one());
    if (!cal.proportional || cal.nu != sign) {
      fail(r, "e=" + std::to_string(e) + " d=" + std::to_string(d) + " k=" + std::to_string(k));
    }
  }
  if (done < r.trials) fail(r, "only " + std::to_string(done) + " generic instances found");
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(const std::string& suite, std::size_t trials, std::uint64_t seed) {
  using Runner = std::function<SuiteResult(std::size_t, std::uint64_t)>;
  const std::vector<std::pair<std::string, Runner>> all = {
      {"cauchy", suite_cauchy},     {"lascoux", suite_lascoux}, {"newton", suite_newton},
      {"roots", suite_roots},       {"resultant", suite_resultant}, {"leads", suite_leads},
      {"characterizations", suite_characterizations}, {"schur", suite_schur}};
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : all) {
    if (suite == "all" || suite == name) out.push_back(fn(trials, seed));
  }
  if (out.empty()) throw UsageError("unknown suite '" + suite + "'");
  return out;
}

}  // namespace euclab::cli
