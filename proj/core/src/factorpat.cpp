#include "euclab/factorpat.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "euclab/error.hpp"
#include "euclab/rng.hpp"

namespace euclab {

namespace {

Poly pth_root(const FieldCtx& ctx, const Poly& c) {
  const u64 p = ctx.modulus();
  std::vector<FieldElem> r(c.deg() / p + 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c.coeff(i * p);  // Frobenius is the identity on F_p
  return Poly(std::move(r));
}

void squarefree_rec(const FieldCtx& ctx, const Poly& f, std::size_t mult, std::map<std::size_t, Poly>& out) {
  if (f.deg() == 0) return;
  const Poly fp = derivative(ctx, f);
  Poly c = fp.is_zero() ? f : gcd(ctx, f, fp);
  Poly w = quo(ctx, f, c);
  for (std::size_t i = 1; !w.is_one(); ++i) {
    Poly y = gcd(ctx, w, c);
    Poly fac = quo(ctx, w, y);
    if (!fac.is_one()) {
      auto [it, inserted] = out.try_emplace(i * mult, fac);
      if (!inserted) it->second = mul(ctx, it->second, fac);
    }
    c = quo(ctx, c, y);
    w = std::move(y);
  }
  if (!c.is_one()) squarefree_rec(ctx, pth_root(ctx, c), mult * ctx.modulus(), out);
}

u64 saturating_mul(u64 a, u64 b) noexcept {
  u128 r = static_cast<u128>(a) * b;
  return r > std::numeric_limits<u64>::max() ? std::numeric_limits<u64>::max() : static_cast<u64>(r);
}

u64 saturating_add(u64 a, u64 b) noexcept {
  return a > std::numeric_limits<u64>::max() - b ? std::numeric_limits<u64>::max() : a + b;
}

// Truncated product of integer polynomials, coefficients saturate.
std::vector<u64> mul_trunc(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t max_deg) {
  std::vector<u64> r(std::min(a.size() + b.size() - 1, max_deg + 1), 0);
  for (std::size_t i = 0; i < a.size() && i <= max_deg; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= max_deg; ++j) r[i + j] = saturating_add(r[i + j], saturating_mul(a[i], b[j]));
  }
  return r;
}

std::vector<u64> pow_trunc(std::vector<u64> base, std::size_t exponent, std::size_t max_deg) {
  std::vector<u64> r{1};
  while (exponent) {
    if (exponent & 1) r = mul_trunc(r, base, max_deg);
    exponent >>= 1;
    if (exponent) base = mul_trunc(base, base, max_deg);
  }
  return r;
}

int mobius(std::size_t n) noexcept {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Poly random_monic(const FieldCtx& ctx, std::size_t degree, SplitMix64& rng) {
  std::vector<FieldElem> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = FieldElem{rng.below(ctx.modulus())};
  c[degree] = ctx.one();
  return Poly(std::move(c));
}

std::vector<Poly> pick_irreducibles(const FieldCtx& ctx, std::size_t degree, std::size_t needed, SplitMix64& rng) {
  const u64 q = ctx.modulus();
  u64 space = 1;
  for (std::size_t i = 0; i < degree && space <= 4096; ++i) space = saturating_mul(space, q);

  std::vector<Poly> out;
  if (space <= 4096) {
    std::vector<Poly> all;
    for (u64 idx = 0; idx < space; ++idx) {
      std::vector<FieldElem> c(degree + 1);
      u64 x = idx;
      for (std::size_t i = 0; i < degree; ++i, x /= q) c[i] = FieldElem{x % q};
      c[degree] = ctx.one();
      Poly p(std::move(c));
      if (is_irreducible(ctx, p)) all.push_back(std::move(p));
    }
    if (all.size() < needed) throw Error(Errc::InfeasibleSpec, "not enough irreducibles of degree " + std::to_string(degree));
    for (std::size_t i = 0; i < needed; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.below(all.size() - i));
      std::swap(all[i], all[j]);
      out.push_back(all[i]);
    }
    return out;
  }

  std::set<std::vector<u64>> seen;
  const std::size_t budget = 2000 * needed * degree + 10000;
  for (std::size_t attempt = 0; attempt < budget && out.size() < needed; ++attempt) {
    Poly p = random_monic(ctx, degree, rng);
    std::vector<u64> key;
    for (auto c : p.coeffs()) key.push_back(c.value);
    if (seen.count(key) || !is_irreducible(ctx, p)) continue;
    seen.insert(std::move(key));
    out.push_back(std::move(p));
  }
  if (out.size() < needed) {
    throw Error(Errc::InfeasibleSpec, "search for " + std::to_string(needed) + " irreducibles of degree " +
                                          std::to_string(degree) + " exhausted its budget");
  }
  return out;
}

std::size_t parse_size(std::string_view tok, std::string_view whole) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size() || v == 0) {
    throw Error(Errc::ParseError, "bad pattern field '" + std::string(tok) + "' in '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::vector<SquarefreeLayer> squarefree_decomposition(const FieldCtx& ctx, const Poly& g) {
  if (g.is_zero() || g.deg() < 1 || !g.is_monic()) {
    throw Error(Errc::InvalidArgument, "squarefree_decomposition needs a monic polynomial of degree >= 1");
  }
  std::map<std::size_t, Poly> layers;
  squarefree_rec(ctx, g, 1, layers);
  std::vector<SquarefreeLayer> out;
  for (auto& [m, p] : layers) out.push_back({m, make_monic(ctx, p)});
  return out;
}

std::vector<std::size_t> ddf_pattern(const FieldCtx& ctx, const Poly& gsf) {
  if (gsf.is_zero()) throw Error(Errc::NotSquarefree, "zero polynomial");
  Poly f = make_monic(ctx, gsf);
  const std::size_t n = f.deg();
  std::vector<std::size_t> counts(n, 0);
  if (n == 0) return counts;
  const Poly fp = derivative(ctx, f);
  if (fp.is_zero() || !gcd(ctx, f, fp).is_one()) {
    throw Error(Errc::NotSquarefree, poly_pretty(gsf) + " has a repeated factor");
  }
  const Poly t = Poly::monomial(ctx.one(), 1);
  Poly h = rem(ctx, t, f);
  std::size_t i = 0;
  while (f.deg() >= 2 * (i + 1)) {
    ++i;
    h = powmod(ctx, h, ctx.modulus(), f);
    Poly split = gcd(ctx, sub(ctx, h, t), f);
    if (!split.is_one()) {
      counts[i - 1] += split.deg() / i;
      f = quo(ctx, f, split);
      h = rem(ctx, h, f);
    }
  }
  if (f.deg() > 0) counts[f.deg() - 1] += 1;
  return counts;
}

bool is_irreducible(const FieldCtx& ctx, const Poly& p) {
  if (p.is_zero() || p.deg() == 0) return false;
  if (p.deg() == 1) return true;
  try {
    auto pat = ddf_pattern(ctx, p);
    return pat.back() == 1;
  } catch (const Error& e) {
    if (e.code() == Errc::NotSquarefree) return false;
    throw;
  }
}

FactorProfile profile(const FieldCtx& ctx, const Poly& g) {
  FactorProfile prof;
  prof.layers = squarefree_decomposition(ctx, g);
  prof.degree = g.deg();
  prof.lambda.assign(prof.degree, 0);
  prof.lambda_star.assign(prof.degree, 0);
  for (const auto& layer : prof.layers) {
    const auto pat = ddf_pattern(ctx, layer.factor);
    for (std::size_t j = 1; j <= pat.size(); ++j) {
      if (pat[j - 1] == 0) continue;
      prof.degree_multiplicity[{j, layer.multiplicity}] += pat[j - 1];
      prof.lambda[j - 1] += layer.multiplicity * pat[j - 1];
      prof.lambda_star[j - 1] += pat[j - 1];
    }
  }
  for (std::size_t i = 1; i <= prof.degree; ++i) {
    if (prof.lambda_star[i - 1] > 0) {
      prof.k = i;
      break;
    }
  }
  return prof;
}

std::uint64_t divisor_count_eta(const FactorProfile& prof, std::size_t i) {
  std::vector<u64> gen{1};
  for (const auto& [key, count] : prof.degree_multiplicity) {
    const auto [j, m] = key;
    std::vector<u64> block(j * m + 1, 0);
    for (std::size_t t = 0; t <= m; ++t) block[t * j] = 1;
    gen = mul_trunc(gen, pow_trunc(block, count, i), i);
  }
  return i < gen.size() ? gen[i] : 0;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  u128 acc = 1;
  for (u64 t = 1; t <= r; ++t) {
    acc = acc * (n - r + t) / t;  // exact at every step
    if (acc > std::numeric_limits<u64>::max()) return std::numeric_limits<u64>::max();
  }
  return static_cast<u64>(acc);
}

EtaBounds eta_bounds(std::span<const std::size_t> lambda, std::size_t k, std::size_t i) {
  if (k == 0 || k > i) throw Error(Errc::InvalidArgument, "eta_bounds needs 1 <= k <= i");
  u64 weighted = 0;
  u64 count = 0;
  for (std::size_t j = k; j <= i && j <= lambda.size(); ++j) {
    weighted += j * lambda[j - 1];
    count += lambda[j - 1];
  }
  EtaBounds b;
  b.binomial_bound = binomial(weighted, i);
  b.power_bound = count >= 64 ? std::numeric_limits<u64>::max() : (u64{1} << count);
  return b;
}

std::uint64_t gf_coefficient(std::span<const std::size_t> lambda, std::size_t k, std::size_t i) {
  if (k == 0 || k > i) throw Error(Errc::InvalidArgument, "gf_coefficient needs 1 <= k <= i");
  std::vector<u64> gen{1};
  for (std::size_t j = k; j <= i && j <= lambda.size(); ++j) {
    if (lambda[j - 1] == 0) continue;
    std::vector<u64> block(j + 1, 0);
    block[0] = block[j] = 1;
    gen = mul_trunc(gen, pow_trunc(block, lambda[j - 1], i), i);
  }
  return i < gen.size() ? gen[i] : 0;
}

std::vector<PatternTerm> parse_pattern(std::string_view text) {
  std::vector<PatternTerm> terms;
  if (text.empty()) throw Error(Errc::ParseError, "empty pattern");
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find(',', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    PatternTerm t;
    const std::size_t x = tok.find('x');
    std::string_view head = tok.substr(0, x);
    if (x != std::string_view::npos) t.count = parse_size(tok.substr(x + 1), text);
    const std::size_t caret = head.find('^');
    t.degree = parse_size(head.substr(0, caret), text);
    if (caret != std::string_view::npos) t.multiplicity = parse_size(head.substr(caret + 1), text);
    terms.push_back(t);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return terms;
}

std::string format_pattern(std::span<const PatternTerm> terms) {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += ',';
    s += std::to_string(t.degree) + '^' + std::to_string(t.multiplicity) + 'x' + std::to_string(t.count);
  }
  return s;
}

std::size_t pattern_degree(std::span<const PatternTerm> terms) {
  std::size_t e = 0;
  for (const auto& t : terms) e += t.degree * t.multiplicity * t.count;
  return e;
}

std::uint64_t count_monic_irreducibles(u64 q, std::size_t n) {
  if (n == 0) return 0;
  // Saturate once q^n leaves the 126-bit headroom of the signed sum.
  __int128 total = 0;
  constexpr __int128 kCap = static_cast<__int128>(1) << 125;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    __int128 power = 1;
    for (std::size_t t = 0; t < n / d; ++t) {
      power *= q;
      if (power > kCap) return std::numeric_limits<u64>::max();
    }
    total += mu * power;
  }
  const __int128 result = total / static_cast<__int128>(n);
  return result > static_cast<__int128>(std::numeric_limits<u64>::max()) ? std::numeric_limits<u64>::max()
                                                                          : static_cast<u64>(result);
}

Poly build_with_pattern(const FieldCtx& ctx, std::span<const PatternTerm> terms, std::uint64_t seed,
                        std::size_t max_degree) {
  if (terms.empty()) throw Error(Errc::InfeasibleSpec, "empty pattern");
  std::map<std::size_t, std::size_t> needed;
  for (const auto& t : terms) {
    if (t.degree == 0 || t.multiplicity == 0 || t.count == 0) throw Error(Errc::InfeasibleSpec, "pattern fields must be positive");
    needed[t.degree] += t.count;
  }
  const std::size_t e = pattern_degree(terms);
  if (e > max_degree) {
    throw Error(Errc::InfeasibleSpec, "pattern degree " + std::to_string(e) + " exceeds " + std::to_string(max_degree));
  }
  for (const auto& [deg, n] : needed) {
    if (n > count_monic_irreducibles(ctx.modulus(), deg)) {
      throw Error(Errc::InfeasibleSpec, "F_" + std::to_string(ctx.modulus()) + " has fewer than " + std::to_string(n) +
                                            " monic irreducibles of degree " + std::to_string(deg));
    }
  }
  SplitMix64 rng(seed);
  std::map<std::size_t, std::vector<Poly>> pool;
  for (const auto& [deg, n] : needed) pool[deg] = pick_irreducibles(ctx, deg, n, rng);

  Poly g = Poly::constant(ctx.one());
  std::map<std::size_t, std::size_t> used;
  for (const auto& t : terms) {
    for (std::size_t c = 0; c < t.count; ++c) {
      const Poly& factor = pool[t.degree][used[t.degree]++];
      g = mul(ctx, g, pow(ctx, factor, t.multiplicity));
    }
  }
  return g;
}

}  // namespace euclab
