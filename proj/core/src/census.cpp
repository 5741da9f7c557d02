#include "euclab/census.hpp"

#include <limits>

#include "euclab/error.hpp"
#include "euclab/euclid.hpp"
#include "euclab/genlead.hpp"
#include "euclab/parallel.hpp"

namespace euclab {

namespace {

constexpr std::uint64_t kChunk = 1 << 14;

struct Counts {
  std::vector<std::uint64_t> B;
  std::uint64_t generic = 0;
  std::uint64_t polydiv = 0;
  std::uint64_t fielddiv = 0;
  std::uint64_t addmul = 0;
};

Counts merge(Counts a, const Counts& b) {
  for (std::size_t i = 0; i < a.B.size(); ++i) a.B[i] += b.B[i];
  a.generic += b.generic;
  a.polydiv += b.polydiv;
  a.fielddiv += b.fielddiv;
  a.addmul += b.addmul;
  return a;
}

// Fills the ascending coefficient array of the f at `index`.
void decode(const FieldCtx& ctx, std::size_t d, std::uint64_t index, std::vector<FieldElem>& c) {
  const u64 q = ctx.modulus();
  c.assign(d + 1, FieldElem{});
  c[d] = ctx.one();
  for (std::size_t i = 1; i <= d; ++i, index /= q) c[d - i] = FieldElem{index % q};
}

// Little-endian increment over (s_1, ..., s_d).
void advance(const FieldCtx& ctx, std::vector<FieldElem>& c) {
  const std::size_t d = c.size() - 1;
  for (std::size_t i = 1; i <= d; ++i) {
    FieldElem& x = c[d - i];
    if (++x.value < ctx.modulus()) return;
    x.value = 0;
  }
}

void check_input(const Poly& g, std::size_t d) {
  if (g.is_zero() || !g.is_monic()) throw Error(Errc::InvalidArgument, "census expects a monic g");
  if (d < 1 || d >= g.deg()) throw Error(Errc::DegreeOrder, "census needs 1 <= d < deg g");
}

std::uint64_t checked_total(u64 q, std::size_t d, std::uint64_t cap) {
  const auto total = monic_count(q, d);
  if (!total || *total > cap) {
    throw Error(Errc::EnumerationTooLarge, std::to_string(q) + "^" + std::to_string(d) + " exceeds the enumeration cap " +
                                               std::to_string(cap));
  }
  return *total;
}

}  // namespace

std::optional<std::uint64_t> monic_count(u64 q, std::size_t d) {
  u128 r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    r *= q;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

Poly enumerate_monic(const FieldCtx& ctx, std::size_t d, std::uint64_t index) {
  std::vector<FieldElem> c;
  decode(ctx, d, index, c);
  return Poly(std::move(c));
}

CensusReport exact_distribution(const FieldCtx& ctx, const Poly& g, std::size_t d, std::uint64_t cap) {
  check_input(g, d);
  const std::uint64_t total = checked_total(ctx.modulus(), d, cap);

  Counts init;
  init.B.assign(d + 1, 0);
  const Counts counts = parallel_chunks(
      total, kChunk, init,
      [&](std::uint64_t begin, std::uint64_t end) {
        Counts local;
        local.B.assign(d + 1, 0);
        EuclidWorkspace ws;
        std::vector<FieldElem> f;
        decode(ctx, d, begin, f);
        for (std::uint64_t i = begin; i < end; ++i, advance(ctx, f)) {
          const EuclidStats s = euclid_stats(ctx, g.coeffs(), f, ws);
          ++local.B[s.gcd_degree];
          local.generic += s.generic;
          local.polydiv += s.t_polydiv;
          local.fielddiv += s.t_fielddiv;
          local.addmul += s.t_addmul;
        }
        return local;
      },
      merge);

  CensusReport r;
  r.q = ctx.modulus();
  r.e = g.deg();
  r.d = d;
  r.g = g;
  r.total = total;
  r.B = counts.B;
  r.generic_count = counts.generic;
  r.sum_polydiv = counts.polydiv;
  r.sum_fielddiv = counts.fielddiv;
  r.sum_addmul = counts.addmul;
  r.union_from.assign(d, 0);
  std::uint64_t tail = 0;
  BigInt weighted = 0;
  for (std::size_t i = d; i >= 1; --i) {
    tail += r.B[i];
    r.union_from[i - 1] = tail;
    weighted += BigInt(i) * r.B[i];
  }
  const BigInt n = total;
  r.E_X = Rational(weighted, n);
  r.P0 = Rational(BigInt(r.B[0]), n);
  r.E_polydiv = Rational(BigInt(r.sum_polydiv), n);
  r.E_fielddiv = Rational(BigInt(r.sum_fielddiv), n);
  r.E_addmul = Rational(BigInt(r.sum_addmul), n);
  return r;
}

CharacterizationFlags verify_characterizations(const FieldCtx& ctx, const Poly& g, std::size_t d, std::uint64_t cap) {
  check_input(g, d);
  const std::uint64_t total = checked_total(ctx.modulus(), d, cap);
  std::optional<GenericLeadSet> leads;
  try {
    leads = generic_lead(ctx, g, d);
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
  }

  CharacterizationFlags flags;
  flags.checked = total;
  if (leads) flags.generic_ok = true;
  std::vector<FieldElem> c;
  decode(ctx, d, 0, c);
  for (std::uint64_t i = 0; i < total; ++i, advance(ctx, c)) {
    const Poly f(c);
    const EuclidTrace t = euclid_trace(ctx, g, f);
    const bool common = t.gcd_degree > 0;
    const bool res_zero = resultant_euclid(ctx, g, f).value == 0;
    if (common != res_zero) {
      flags.resultant_ok = false;
      if (flags.first_failure.empty()) flags.first_failure = "resultant mismatch at f = " + poly_pretty(f);
    }
    if (leads) {
      const auto s = generic_coordinates(f);
      bool all_nonzero = true;
      for (std::size_t k = 1; k <= d && all_nonzero; ++k) all_nonzero = eval_multipoly(ctx, leads->G(k), s).value != 0;
      if (all_nonzero != is_generic(t, d)) {
        flags.generic_ok = false;
        if (flags.first_failure.empty()) flags.first_failure = "genericity mismatch at f = " + poly_pretty(f);
      }
    }
  }
  return flags;
}

}  // namespace euclab
