#include "euclab/genlead.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "euclab/error.hpp"
#include "euclab/euclid.hpp"
#include "euclab/rng.hpp"
#include "euclab/symschur.hpp"

namespace euclab {

namespace {

using Series = std::vector<MultiPoly>;

// Coefficients (in T^0..T^n) of the multi-Schur function S_{m^n}(X - T):
// the (n+1)x(n+1) determinant with entries S^{m+c-h}(X) in columns 1..n and
// T^{n+1-h} in the last column, expanded along that column.
std::vector<MultiPoly> generic_schur_in_t(const FieldCtx& ctx, std::size_t m, std::size_t n, const Series& S) {
  const std::size_t nv = S.front().nvars();
  auto entry = [&](std::size_t r, std::size_t c) -> const MultiPoly* {
    const std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(m + c) - static_cast<std::ptrdiff_t>(r);
    if (idx < 0) return nullptr;
    return &S.at(static_cast<std::size_t>(idx));
  };

  // minors[mask] = det of rows in mask against columns 0..popcount(mask)-1.
  std::unordered_map<std::uint32_t, MultiPoly> minors;
  minors.emplace(0u, MultiPoly::constant(nv, ctx.one()));
  const std::uint32_t full = (std::uint32_t{1} << (n + 1)) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::size_t c = static_cast<std::size_t>(std::popcount(mask));
    if (c > n) continue;
    MultiPoly acc(nv);
    std::size_t pos = 0;
    for (std::size_t r = 0; r <= n; ++r) {
      if (!(mask & (std::uint32_t{1} << r))) continue;
      const MultiPoly* a = entry(r, c - 1);
      if (a && !a->is_zero()) {
        const MultiPoly& sub = minors.at(mask & ~(std::uint32_t{1} << r));
        MultiPoly term = mul(ctx, *a, sub);
        acc = (pos + c - 1) % 2 == 0 ? add(ctx, acc, term) : euclab::sub(ctx, acc, term);
      }
      ++pos;
    }
    minors.emplace(mask, std::move(acc));
  }

  std::vector<MultiPoly> out(n + 1, MultiPoly(nv));
  for (std::size_t h = 1; h <= n + 1; ++h) {
    const MultiPoly& minor = minors.at(full & ~(std::uint32_t{1} << (h - 1)));
    out[n + 1 - h] = (h + n + 1) % 2 == 0 ? minor : scale(ctx, minor, ctx.neg(ctx.one()));
  }
  return out;
}

FieldElem generic_prefix_product(const FieldCtx& ctx, const EuclidTrace& t, std::size_t d, std::size_t k, bool& ok) {
  ok = t.remainders.size() >= k;
  for (std::size_t i = 0; ok && i < k; ++i) ok = t.degree_sequence[i] == d - 1 - i;
  if (!ok) return ctx.zero();
  FieldElem p = t.remainders[k - 1].lead();
  for (std::size_t i = 0; i + 1 < k; ++i) p = ctx.mul(p, ctx.mul(t.remainders[i].lead(), t.remainders[i].lead()));
  return p;
}

}  // namespace

std::vector<FieldElem> complete_from_poly(const FieldCtx& ctx, const Poly& g, std::size_t N) {
  if (g.is_zero() || !g.is_monic()) throw Error(Errc::InvalidArgument, "complete_from_poly expects a monic polynomial");
  const std::size_t e = g.deg();
  std::vector<FieldElem> s(N + 1, ctx.zero());
  s[0] = ctx.one();
  // g_rev(z) = sum_i g_{e-i} z^i; s = 1 / g_rev.
  for (std::size_t m = 1; m <= N; ++m) {
    FieldElem acc = ctx.zero();
    for (std::size_t i = 1; i <= std::min(m, e); ++i) acc = ctx.add(acc, ctx.mul(g.coeff(e - i), s[m - i]));
    s[m] = ctx.neg(acc);
  }
  return s;
}

std::vector<FieldElem> generic_coordinates(const Poly& f) {
  const std::size_t d = f.deg();
  std::vector<FieldElem> s(d);
  for (std::size_t i = 1; i <= d; ++i) s[i - 1] = f.coeff(d - i);
  return s;
}

FieldElem eval_multipoly(const FieldCtx& ctx, const MultiPoly& p, std::span<const FieldElem> point) {
  return evaluate(ctx, p, point);
}

GenericLeadSet generic_lead(const FieldCtx& ctx, const Poly& g, std::size_t d, std::size_t max_e) {
  if (g.is_zero() || !g.is_monic()) throw Error(Errc::InvalidArgument, "generic_lead expects a monic g");
  const std::size_t e = g.deg();
  if (d < 1 || d >= e) throw Error(Errc::DegreeOrder, "generic_lead needs 1 <= d < deg g");
  if (e > max_e) throw Error(Errc::TooLarge, "generic_lead limited to deg g <= " + std::to_string(max_e));

  const std::size_t nv = d;
  const std::size_t N = e + d;
  const MultiPoly one = MultiPoly::constant(nv, ctx.one());
  // fs[j] = s_j with s_0 = 1: the coefficient of T^{d-j} in f.
  std::vector<MultiPoly> fs{one};
  for (std::size_t i = 1; i <= d; ++i) fs.push_back(MultiPoly::variable(nv, i, ctx.one()));

  const std::vector<FieldElem> SA = complete_from_poly(ctx, g, N);
  Series SAB(N + 1, MultiPoly(nv));  // S^m(A - B) = sum_j S^{m-j}(A) s_j
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t j = 0; j <= std::min(m, d); ++j) SAB[m] = add(ctx, SAB[m], scale(ctx, fs[j], SA[m - j]));

  Series inv_f(N + 1, MultiPoly(nv));  // 1 / prod(1 - z b)
  inv_f[0] = one;
  for (std::size_t m = 1; m <= N; ++m) {
    MultiPoly acc(nv);
    for (std::size_t i = 1; i <= std::min(m, d); ++i) acc = add(ctx, acc, mul(ctx, fs[i], inv_f[m - i]));
    inv_f[m] = scale(ctx, acc, ctx.neg(ctx.one()));
  }
  Series SBA(N + 1, MultiPoly(nv));  // S^m(B - A) = g_rev * inv_f
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t j = 0; j <= std::min(m, e); ++j) SBA[m] = add(ctx, SBA[m], scale(ctx, inv_f[m - j], g.coeff(e - j)));

  GenericLeadSet set;
  set.q = ctx.modulus();
  set.e = e;
  set.d = d;
  set.g = g;
  SplitMix64 rng(0x5EED0000ULL + e * 131 + d);
  for (std::size_t k = 1; k <= d; ++k) {
    const std::size_t w = e - d + k;
    const auto P1 = generic_schur_in_t(ctx, w, k - 1, SBA);
    const auto P2 = generic_schur_in_t(ctx, k, w - 1, SAB);
    const std::size_t target = d - k;
    MultiPoly first(nv), second(nv);
    for (std::size_t j = 0; j < P1.size() && j <= target; ++j) first = add(ctx, first, scale(ctx, P1[j], g.coeff(target - j)));
    for (std::size_t j = 0; j < P2.size() && j <= target; ++j) second = add(ctx, second, mul(ctx, P2[j], fs[k + j]));
    if (validated_remainder_sign(e, d, k) < 0) first = scale(ctx, first, ctx.neg(ctx.one()));
    MultiPoly raw = add(ctx, first, second);

    MultiPoly::Exponents lead_exp(nv, 0);
    lead_exp[k - 1] = static_cast<std::uint16_t>(w);
    GenericLead lead;
    lead.k = k;
    lead.monic_scalar = raw.coefficient(lead_exp);
    if (lead.monic_scalar.value == 0) {
      throw Error(Errc::InvalidArgument, "G_" + std::to_string(k) + " has no s_k^" + std::to_string(w) + " term");
    }
    lead.poly = scale(ctx, raw, ctx.inv(lead.monic_scalar));

    for (int attempt = 0; attempt < 256 && !lead.euclid_scalar; ++attempt) {
      std::vector<FieldElem> c(d + 1);
      for (std::size_t i = 0; i < d; ++i) c[i] = FieldElem{rng.below(ctx.modulus())};
      c[d] = ctx.one();
      const Poly f(std::move(c));
      bool ok = false;
      const FieldElem denom = generic_prefix_product(ctx, euclid_trace(ctx, g, f), d, k, ok);
      if (!ok) continue;
      lead.euclid_scalar = ctx.div(eval_multipoly(ctx, lead.poly, generic_coordinates(f)), denom);
    }
    set.leads.push_back(std::move(lead));
  }
  return set;
}

}  // namespace euclab
