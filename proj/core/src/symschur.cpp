#include "euclab/symschur.hpp"

#include <algorithm>

#include "euclab/error.hpp"
#include "euclab/euclid.hpp"

namespace euclab {

namespace {

FieldElem signed_elem(const FieldCtx& ctx, FieldElem x, bool negative) { return negative ? ctx.neg(x) : x; }

void check_remainder_args(std::size_t k, const Alphabet& A, const Alphabet& B) {
  if (B.size() < 1 || A.size() <= B.size() || k < 1 || k > B.size()) {
    throw Error(Errc::InvalidArgument, "remainder formula needs |A| > |B| >= k >= 1");
  }
}

}  // namespace

Alphabet concat(const Alphabet& a, const Alphabet& b) {
  Alphabet r = a;
  r.elements.insert(r.elements.end(), b.elements.begin(), b.elements.end());
  return r;
}

FieldElem SymSeries::at(std::ptrdiff_t i) const {
  if (i < 0) return FieldElem{};
  if (static_cast<std::size_t>(i) >= c_.size()) {
    throw Error(Errc::IndexOutOfRange, "series index " + std::to_string(i) + " beyond order " + std::to_string(order()));
  }
  return c_[static_cast<std::size_t>(i)];
}

SymSeries series_mul(const FieldCtx& ctx, const SymSeries& a, const SymSeries& b) {
  const std::size_t N = std::min(a.order(), b.order());
  std::vector<FieldElem> r(N + 1, ctx.zero());
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t j = 0; i + j <= N; ++j) r[i + j] = ctx.mul_add(a.coeffs()[i], b.coeffs()[j], r[i + j]);
  return SymSeries(std::move(r));
}

SymSeries series_inverse(const FieldCtx& ctx, const SymSeries& a) {
  const std::size_t N = a.order();
  const FieldElem inv0 = ctx.inv(a.at(0));
  std::vector<FieldElem> r(N + 1, ctx.zero());
  r[0] = inv0;
  for (std::size_t m = 1; m <= N; ++m) {
    FieldElem acc = ctx.zero();
    for (std::size_t i = 1; i <= m; ++i) acc = ctx.mul_add(a.coeffs()[i], r[m - i], acc);
    r[m] = ctx.neg(ctx.mul(acc, inv0));
  }
  return SymSeries(std::move(r));
}

SymSeries complete(const FieldCtx& ctx, const Alphabet& A, std::size_t N) {
  std::vector<FieldElem> s(N + 1, ctx.zero());
  s[0] = ctx.one();
  for (FieldElem a : A.elements)
    for (std::size_t i = 1; i <= N; ++i) s[i] = ctx.mul_add(a, s[i - 1], s[i]);
  return SymSeries(std::move(s));
}

SymSeries elementary(const FieldCtx& ctx, const Alphabet& A, std::size_t N) {
  std::vector<FieldElem> l(N + 1, ctx.zero());
  l[0] = ctx.one();
  for (FieldElem a : A.elements)
    for (std::size_t i = N; i >= 1; --i) l[i] = ctx.mul_add(a, l[i - 1], l[i]);
  return SymSeries(std::move(l));
}

CompleteElementary complete_and_elementary(const FieldCtx& ctx, const Alphabet& A, std::size_t N) {
  return {complete(ctx, A, N), elementary(ctx, A, N)};
}

SymSeries s_difference(const FieldCtx& ctx, const Alphabet& A, const Alphabet& B, std::size_t N) {
  std::vector<FieldElem> s(N + 1, ctx.zero());
  s[0] = ctx.one();
  for (FieldElem b : B.elements)
    for (std::size_t i = N; i >= 1; --i) s[i] = ctx.sub(s[i], ctx.mul(b, s[i - 1]));
  for (FieldElem a : A.elements)
    for (std::size_t i = 1; i <= N; ++i) s[i] = ctx.mul_add(a, s[i - 1], s[i]);
  return SymSeries(std::move(s));
}

SymSeries s_difference_cauchy(const FieldCtx& ctx, const Alphabet& A, const Alphabet& B, std::size_t N) {
  const SymSeries SA = complete(ctx, A, N);
  const SymSeries LB = elementary(ctx, B, N);
  std::vector<FieldElem> s(N + 1, ctx.zero());
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t k = 0; k <= i; ++k)
      s[i] = ctx.add(s[i], ctx.mul(SA.at(static_cast<std::ptrdiff_t>(i - k)), signed_elem(ctx, LB.coeffs()[k], k % 2)));
  return SymSeries(std::move(s));
}

FieldElem field_det(const FieldCtx& ctx, FieldMatrix M) {
  const std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  FieldElem det = ctx.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && M[piv][c].value == 0) ++piv;
    if (piv == n) return ctx.zero();
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = ctx.neg(det);
    }
    det = ctx.mul(det, M[c][c]);
    const FieldElem inv = ctx.inv(M[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (M[r][c].value == 0) continue;
      const FieldElem f = ctx.mul(M[r][c], inv);
      for (std::size_t k = c; k < n; ++k) M[r][k] = ctx.sub(M[r][k], ctx.mul(f, M[c][k]));
    }
  }
  return det;
}

FieldElem multi_schur_det(const FieldCtx& ctx, std::span<const std::size_t> J, std::span<const SymSeries> series) {
  const std::size_t n = J.size();
  if (series.size() != n) throw Error(Errc::DimensionMismatch, "one series per column expected");
  FieldMatrix M(n, std::vector<FieldElem>(n));
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      M[h][k] = series[k].at(static_cast<std::ptrdiff_t>(J[k] + k) - static_cast<std::ptrdiff_t>(h));
  return field_det(ctx, std::move(M));
}

FieldElem schur_det(const FieldCtx& ctx, std::span<const std::size_t> J, const SymSeries& S) {
  const std::vector<SymSeries> series(J.size(), S);
  return multi_schur_det(ctx, J, series);
}

FieldElem schur_tcolumn(const FieldCtx& ctx, std::span<const std::size_t> J, std::size_t l, const SymSeries& S,
                        FieldElem t) {
  const std::size_t n = J.size();
  FieldMatrix M(n + 1, std::vector<FieldElem>(n + 1));
  for (std::size_t h = 0; h <= n; ++h) {
    for (std::size_t k = 0; k < n; ++k) M[h][k] = S.at(static_cast<std::ptrdiff_t>(J[k] + k) - static_cast<std::ptrdiff_t>(h));
    M[h][n] = ctx.pow(t, l + n - h);
  }
  return field_det(ctx, std::move(M));
}

Poly schur_in_t(const FieldCtx& ctx, std::size_t m, std::size_t n, const SymSeries& S) {
  std::vector<FieldElem> coeffs(n + 1, ctx.zero());
  for (std::size_t h = 1; h <= n + 1; ++h) {
    FieldMatrix minor;
    for (std::size_t r = 1; r <= n + 1; ++r) {
      if (r == h) continue;
      std::vector<FieldElem> row(n);
      for (std::size_t c = 1; c <= n; ++c) row[c - 1] = S.at(static_cast<std::ptrdiff_t>(m + c) - static_cast<std::ptrdiff_t>(r));
      minor.push_back(std::move(row));
    }
    coeffs[n + 1 - h] = signed_elem(ctx, field_det(ctx, std::move(minor)), (h + n + 1) % 2);
  }
  return Poly(std::move(coeffs));
}

bool lascoux_148_check(const FieldCtx& ctx, std::span<const std::size_t> J, std::size_t k, const Alphabet& A,
                       const Alphabet& B, FieldElem t) {
  std::size_t N = 0;
  for (std::size_t i = 0; i < J.size(); ++i) N = std::max(N, J[i] + i);
  const SymSeries with_t = s_difference(ctx, A, concat(B, Alphabet{{t}}), N);
  const FieldElem lhs = ctx.mul(schur_det(ctx, J, with_t), ctx.pow(t, k));
  const FieldElem rhs = schur_tcolumn(ctx, J, k, s_difference(ctx, A, B, N), t);
  return lhs == rhs;
}

int validated_remainder_sign(std::size_t e, std::size_t d, std::size_t k) noexcept {
  return (k * (e - d + 1)) % 2 == 0 ? 1 : -1;
}

Poly remainder_via_schur(const FieldCtx& ctx, std::size_t k, const Alphabet& A, const Alphabet& B, RemainderSign sign) {
  check_remainder_args(k, A, B);
  const std::size_t e = A.size();
  const std::size_t d = B.size();
  const std::size_t N = e + d;
  const Poly first = mul(ctx, schur_in_t(ctx, e - d + k, k - 1, s_difference(ctx, B, A, N)), from_roots(ctx, A.elements));
  const Poly second = mul(ctx, schur_in_t(ctx, k, e - d + k - 1, s_difference(ctx, A, B, N)), from_roots(ctx, B.elements));
  const bool negative = sign == RemainderSign::Literal ? (d - k + 1) % 2 == 1 : validated_remainder_sign(e, d, k) < 0;
  return add(ctx, negative ? neg(ctx, first) : first, second);
}

RemainderCalibration calibrate_remainder(const FieldCtx& ctx, std::size_t k, const Alphabet& A, const Alphabet& B,
                                         RemainderSign sign) {
  check_remainder_args(k, A, B);
  const std::size_t d = B.size();
  const EuclidTrace t = euclid_trace(ctx, from_roots(ctx, A.elements), from_roots(ctx, B.elements));
  RemainderCalibration cal;
  cal.generic_prefix = t.remainders.size() >= k;
  for (std::size_t i = 0; cal.generic_prefix && i < k; ++i) cal.generic_prefix = t.degree_sequence[i] == d - 1 - i;
  if (!cal.generic_prefix) return cal;

  const Poly& r = t.remainders[k - 1];
  const Poly R = remainder_via_schur(ctx, k, A, B, sign);
  cal.ratio = ctx.div(R.coeff(r.deg()), r.lead());
  cal.proportional = R == scale(ctx, r, cal.ratio);
  FieldElem lc2 = ctx.one();
  for (std::size_t i = 0; i + 1 < k; ++i) lc2 = ctx.mul(lc2, ctx.mul(t.remainders[i].lead(), t.remainders[i].lead()));
  cal.nu = ctx.div(cal.ratio, lc2);
  return cal;
}

}  // namespace euclab
