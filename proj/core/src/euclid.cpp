#include "euclab/euclid.hpp"

#include <utility>

#include "euclab/error.hpp"

namespace euclab {

namespace {

void check_pair(const Poly& g, const Poly& f) {
  if (g.is_zero() || f.is_zero()) throw Error(Errc::ZeroInput, "euclid_trace on a zero polynomial");
  if (!g.is_monic() || !f.is_monic()) throw Error(Errc::InvalidArgument, "euclid_trace expects monic inputs");
  if (f.deg() >= g.deg()) {
    throw Error(Errc::DegreeOrder, "need deg f < deg g, got deg f = " + std::to_string(f.deg()) +
                                       ", deg g = " + std::to_string(g.deg()));
  }
  if (f.deg() < 1) throw Error(Errc::DegreeOrder, "need deg f >= 1");
}

}  // namespace

EuclidTrace euclid_trace(const FieldCtx& ctx, const Poly& g, const Poly& f) {
  check_pair(g, f);
  EuclidTrace t;
  Poly a = g;
  Poly b = f;
  while (true) {
    DivisionResult step = synthetic_division(ctx, a, b);
    ++t.t_polydiv;
    t.t_fielddiv += step.field_divisions;
    t.t_addmul += step.add_mul;
    t.quotients.push_back(std::move(step.quotient));
    if (step.remainder.is_zero()) break;
    t.degree_sequence.push_back(step.remainder.deg());
    t.remainders.push_back(step.remainder);
    a = std::move(b);
    b = std::move(step.remainder);
  }
  t.gcd = make_monic(ctx, b);
  t.gcd_degree = t.gcd.deg();
  return t;
}

bool is_generic(const EuclidTrace& trace, std::size_t d) noexcept {
  if (trace.remainders.size() != d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (trace.degree_sequence[i] != d - 1 - i) return false;
  }
  return true;
}

bool is_generic(const FieldCtx& ctx, const Poly& g, const Poly& f) {
  return is_generic(euclid_trace(ctx, g, f), f.deg());
}

EuclidStats summarize(const EuclidTrace& trace, std::size_t d) noexcept {
  EuclidStats s;
  s.length = trace.remainders.size();
  s.gcd_degree = trace.gcd_degree;
  s.t_polydiv = trace.t_polydiv;
  s.t_fielddiv = trace.t_fielddiv;
  s.t_addmul = trace.t_addmul;
  s.generic = is_generic(trace, d);
  return s;
}

EuclidStats euclid_stats(const FieldCtx& ctx, std::span<const FieldElem> g, std::span<const FieldElem> f,
                         EuclidWorkspace& ws) {
  auto& a = ws.a_;
  auto& b = ws.b_;
  a.assign(g.begin(), g.end());
  b.assign(f.begin(), f.end());
  const std::size_t d = f.size() - 1;
  EuclidStats s;
  // a has degree da, b has degree db; both nonzero at loop entry.
  std::size_t da = a.size() - 1;
  std::size_t db = b.size() - 1;
  bool degrees_drop_by_one = true;
  while (true) {
    const FieldElem inv_lc = ctx.inv(b[db]);
    for (std::size_t i = da - db + 1; i-- > 0;) {
      const FieldElem c = ctx.mul(a[i + db], inv_lc);
      ++s.t_fielddiv;
      a[i + db] = FieldElem{};
      for (std::size_t j = 0; j < db; ++j) a[i + j] = ctx.sub(a[i + j], ctx.mul(c, b[j]));
      s.t_addmul += db;
    }
    ++s.t_polydiv;
    // Remainder lives in a[0..db).
    std::size_t dr = db;
    while (dr > 0 && a[dr - 1].value == 0) --dr;
    if (dr == 0) break;  // zero remainder
    const std::size_t rdeg = dr - 1;
    ++s.length;
    if (rdeg + s.length != d) degrees_drop_by_one = false;
    a.resize(dr);
    std::swap(a, b);
    da = db;
    db = rdeg;
  }
  s.gcd_degree = db;
  s.generic = degrees_drop_by_one && s.length == d;
  return s;
}

FieldElem resultant_euclid(const FieldCtx& ctx, const Poly& g, const Poly& f) {
  if (g.is_zero() || f.is_zero()) throw Error(Errc::ZeroInput, "resultant of a zero polynomial");
  Poly a = g;
  Poly b = f;
  FieldElem acc = ctx.one();
  while (true) {
    const std::size_t m = a.deg();
    const std::size_t n = b.deg();
    if (n == 0) return ctx.mul(acc, ctx.pow(b.lead(), m));
    Poly r = rem(ctx, a, b);
    if (r.is_zero()) return ctx.zero();
    if ((m * n) % 2 == 1) acc = ctx.neg(acc);
    acc = ctx.mul(acc, ctx.pow(b.lead(), m - r.deg()));
    a = std::move(b);
    b = std::move(r);
  }
}

FieldElem resultant_sylvester(const FieldCtx& ctx, const Poly& g, const Poly& f) {
  if (g.is_zero() || f.is_zero()) throw Error(Errc::ZeroInput, "resultant of a zero polynomial");
  const std::size_t m = g.deg();
  const std::size_t n = f.deg();
  const std::size_t N = m + n;
  if (N == 0) return ctx.one();
  std::vector<std::vector<FieldElem>> M(N, std::vector<FieldElem>(N));
  // n shifted rows of g, then m shifted rows of f; descending coefficients.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) M[r][r + i] = g.coeff(m - i);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) M[n + r][r + i] = f.coeff(n - i);

  FieldElem det = ctx.one();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && M[piv][c].value == 0) ++piv;
    if (piv == N) return ctx.zero();
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = ctx.neg(det);
    }
    det = ctx.mul(det, M[c][c]);
    const FieldElem inv = ctx.inv(M[c][c]);
    for (std::size_t r = c + 1; r < N; ++r) {
      if (M[r][c].value == 0) continue;
      const FieldElem factor = ctx.mul(M[r][c], inv);
      for (std::size_t k = c; k < N; ++k) M[r][k] = ctx.sub(M[r][k], ctx.mul(factor, M[c][k]));
    }
  }
  return det;
}

}  // namespace euclab
