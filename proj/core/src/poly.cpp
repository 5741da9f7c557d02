#include "euclab/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "euclab/error.hpp"

namespace euclab {

Poly::Poly(std::vector<FieldElem> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Poly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldElem c) { return Poly(std::vector<FieldElem>{c}); }

Poly Poly::monomial(FieldElem c, std::size_t degree) {
  std::vector<FieldElem> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> ascending) {
  std::vector<FieldElem> v;
  v.reserve(ascending.size());
  for (auto x : ascending) v.push_back(ctx.from_int(x));
  return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const noexcept {
  if (is_zero()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Poly::deg() const {
  if (is_zero()) throw Error(Errc::ZeroInput, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Poly add(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  std::vector<FieldElem> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly sub(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  std::vector<FieldElem> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly neg(const FieldCtx& ctx, const Poly& a) {
  std::vector<FieldElem> r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.neg(a.coeff(i));
  return Poly(std::move(r));
}

Poly mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElem> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeff(i).value == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ctx.mul_add(a.coeff(i), b.coeff(j), r[i + j]);
  }
  return Poly(std::move(r));
}

Poly scale(const FieldCtx& ctx, const Poly& a, FieldElem c) {
  std::vector<FieldElem> r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.mul(a.coeff(i), c);
  return Poly(std::move(r));
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.is_zero()) return {};
  std::vector<FieldElem> r(k, FieldElem{});
  r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(r));
}

Poly make_monic(const FieldCtx& ctx, const Poly& a) {
  if (a.is_zero()) return {};
  return scale(ctx, a, ctx.inv(a.lead()));
}

Poly derivative(const FieldCtx& ctx, const Poly& a) {
  if (a.size() <= 1) return {};
  std::vector<FieldElem> r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = ctx.mul(a.coeff(i), ctx.from_uint(i));
  return Poly(std::move(r));
}

Poly pow(const FieldCtx& ctx, const Poly& a, std::size_t exponent) {
  Poly r = Poly::constant(ctx.one());
  Poly base = a;
  while (exponent) {
    if (exponent & 1) r = mul(ctx, r, base);
    exponent >>= 1;
    if (exponent) base = mul(ctx, base, base);
  }
  return r;
}

FieldElem evaluate(const FieldCtx& ctx, const Poly& a, FieldElem x) {
  FieldElem acc{};
  for (std::size_t i = a.size(); i-- > 0;) acc = ctx.mul_add(acc, x, a.coeff(i));
  return acc;
}

Poly from_roots(const FieldCtx& ctx, std::span<const FieldElem> roots) {
  std::vector<FieldElem> c{ctx.one()};
  for (FieldElem a : roots) {
    // c <- c * (T - a)
    c.push_back(FieldElem{});
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = ctx.sub(c[i - 1], ctx.mul(a, c[i]));
    c[0] = ctx.neg(ctx.mul(a, c[0]));
  }
  return Poly(std::move(c));
}

DivisionResult synthetic_division(const FieldCtx& ctx, const Poly& f1, const Poly& f2) {
  if (f2.is_zero()) throw Error(Errc::DivisionByZeroPoly, "synthetic_division by zero");
  DivisionResult out;
  if (f1.is_zero() || f1.deg() < f2.deg()) {
    out.remainder = f1;
    return out;
  }
  const std::size_t m = f1.deg();
  const std::size_t n = f2.deg();
  std::vector<FieldElem> r(f1.coeffs().begin(), f1.coeffs().end());
  std::vector<FieldElem> q(m - n + 1);
  const FieldElem lc = f2.lead();
  for (std::size_t i = m - n + 1; i-- > 0;) {
    FieldElem c = ctx.div(r[i + n], lc);
    ++out.field_divisions;
    q[i] = c;
    r[i + n] = FieldElem{};
    for (std::size_t j = 0; j < n; ++j) {
      r[i + j] = ctx.sub(r[i + j], ctx.mul(c, f2.coeff(j)));
      ++out.add_mul;
    }
  }
  r.resize(n);
  out.quotient = Poly(std::move(q));
  out.remainder = Poly(std::move(r));
  return out;
}

Poly rem(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "rem by zero");
  if (a.is_zero() || a.deg() < b.deg()) return a;
  const std::size_t n = b.deg();
  std::vector<FieldElem> r(a.coeffs().begin(), a.coeffs().end());
  const FieldElem inv_lc = ctx.inv(b.lead());
  for (std::size_t top = r.size(); top-- > n;) {
    FieldElem c = ctx.mul(r[top], inv_lc);
    if (c.value == 0) continue;
    const std::size_t base = top - n;
    for (std::size_t j = 0; j <= n; ++j) r[base + j] = ctx.sub(r[base + j], ctx.mul(c, b.coeff(j)));
  }
  r.resize(n);
  return Poly(std::move(r));
}

Poly quo(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  return synthetic_division(ctx, a, b).quotient;
}

bool divides(const FieldCtx& ctx, const Poly& d, const Poly& a) { return rem(ctx, a, d).is_zero(); }

Poly gcd(const FieldCtx& ctx, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = rem(ctx, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(ctx, a);
}

Poly powmod(const FieldCtx& ctx, const Poly& base, u64 exponent, const Poly& modulus) {
  Poly r = rem(ctx, Poly::constant(ctx.one()), modulus);
  Poly b = rem(ctx, base, modulus);
  while (exponent) {
    if (exponent & 1) r = rem(ctx, mul(ctx, r, b), modulus);
    exponent >>= 1;
    if (exponent) b = rem(ctx, mul(ctx, b, b), modulus);
  }
  return r;
}

Poly poly_parse(const FieldCtx& ctx, std::string_view text) {
  std::vector<FieldElem> c;
  std::size_t pos = 0;
  if (text.empty()) throw Error(Errc::ParseError, "empty coefficient list");
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size()) {
      throw Error(Errc::ParseError, "bad coefficient '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    c.push_back(ctx.from_int(v));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return Poly(std::move(c));
}

std::string poly_format(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.coeff(i).value);
  }
  return s;
}

std::string poly_pretty(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const u64 c = p.coeff(i).value;
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'T';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace euclab
