#include "euclab/estimator.hpp"

#include <algorithm>

#include "euclab/error.hpp"

namespace euclab {

namespace {

void require_k_le_d(std::size_t k, std::size_t d) {
  if (k == 0 || k > d) {
    throw Error(Errc::InvalidArgument, "bound needs a factor of degree <= d (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
  }
}

Rational pg_defect(u64 q, std::size_t e, std::size_t d) {
  // d(2e-d+1)/(2q); d < e keeps the numerator positive.
  return Rational(BigInt(d) * (2 * BigInt(e) - d + 1), 2 * BigInt(q));
}

BigInt choose2(std::size_t n) { return BigInt(n) * (n == 0 ? 0 : n - 1) / 2; }

CostWindow window(const Rational& center, const Rational& lower_defect, const Rational& spread) {
  CostWindow w;
  w.center = center;
  w.lemma_lower = center * (1 - lower_defect);
  w.lemma_upper = center * (1 + spread);
  w.thm_lower = center * (1 - spread);
  w.thm_upper = center * (1 + spread);
  return w;
}

}  // namespace

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string fraction_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational round6(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x) * 1000000;
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;  // truncates toward zero
  BigInt r = num % den;
  if (r < 0) {
    q -= 1;
    r += den;
  }
  const BigInt twice = 2 * r;
  if (twice > den || (twice == den && (q & 1) != 0)) q += 1;
  return Rational(q, 1000000);
}

std::string format_fixed6(const Rational& x) {
  const BigInt scaled = boost::multiprecision::numerator(round6(x) * 1000000);
  const bool negative = scaled < 0;
  std::string digits = (negative ? BigInt(-scaled) : scaled).str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  digits.insert(digits.size() - 6, ".");
  return negative ? "-" + digits : digits;
}

BigInt ipow(u64 base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

MainTerms main_terms(u64 q, std::size_t e, std::size_t d, std::size_t k, std::size_t lambda_star_k) {
  MainTerms m;
  m.PG = 1 - pg_defect(q, e, d);
  if (k == 0 || k > d) {
    m.k_exceeds_d = true;
    m.E_g = 0;
    m.P0 = 1;
    return m;
  }
  const BigInt qk = ipow(q, k);
  m.E_g = Rational(BigInt(k) * lambda_star_k, qk);
  m.P0 = 1 - Rational(BigInt(lambda_star_k), qk);
  return m;
}

MainTerms main_terms(u64 q, std::size_t e, std::size_t d, const FactorProfile& prof) {
  return main_terms(q, e, d, prof.k, prof.lambda_star_at(prof.k));
}

Interval union_bounds(u64 q, std::size_t d, const FactorProfile& prof) {
  const std::size_t k = prof.k;
  require_k_le_d(k, d);
  const std::size_t lk = prof.lambda_star_at(k);
  const BigInt base = BigInt(lk) * ipow(q, d - k);
  Interval b;
  b.lower = base - choose2(lk) * ipow(q, d >= 2 * k ? d - 2 * k : 0);
  BigInt up = base;
  for (std::size_t i = k + 1; i <= d; ++i) up += BigInt(prof.lambda_star_at(i)) * ipow(q, d - i);
  b.upper = up;
  return b;
}

CoprimeBounds coprime_bounds(u64 q, std::size_t d, const FactorProfile& prof) {
  const std::size_t k = prof.k;
  require_k_le_d(k, d);
  const std::size_t lk = prof.lambda_star_at(k);
  const Rational main = 1 - Rational(BigInt(lk), ipow(q, k));
  CoprimeBounds c;
  c.bounds.lower = main;
  for (std::size_t i = k + 1; i <= d; ++i) c.bounds.lower -= Rational(BigInt(prof.lambda_star_at(i)), ipow(q, i));
  c.bounds.upper = main + Rational(choose2(lk), ipow(q, std::min(2 * k, d)));
  c.q_exceeds_2e = q > 2 * prof.degree;
  c.in_unit_interval = c.bounds.lower >= 0 && c.bounds.upper <= 1;
  return c;
}

AvgDegBounds avgdeg_bounds(u64 q, std::size_t d, const FactorProfile& prof) {
  const std::size_t k = prof.k;
  require_k_le_d(k, d);
  const std::size_t lk = prof.lambda_star_at(k);
  const Rational main(BigInt(k) * lk, ipow(q, k));
  AvgDegBounds a;
  a.bounds.lower = main - Rational(choose2(lk) * k, ipow(q, std::min(2 * k, d)));
  a.bounds.upper = main;
  a.upper_eta = 0;
  for (std::size_t i = k; i <= d; ++i) {
    const BigInt qi = ipow(q, i);
    if (i > k) a.bounds.upper += Rational(BigInt(i) * gf_coefficient(prof.lambda, k, i), qi);
    a.upper_eta += Rational(BigInt(i) * divisor_count_eta(prof, i), qi);
  }
  a.simple_upper = Rational(BigInt(d) * prof.degree, ipow(q, k));
  return a;
}

CostBounds cost_bounds(u64 q, std::size_t e, std::size_t d) {
  const Rational defect = pg_defect(q, e, d);
  const Rational spread(BigInt(d) * e, BigInt(q));
  CostBounds c;
  c.polydiv = window(Rational(d + 1), defect, spread);
  c.fielddiv = window(Rational(e + d + 1), defect, spread);
  c.addmul = window(Rational(BigInt(d) * e), defect, spread);
  c.theorem_applies = 2 * BigInt(q) > BigInt(d) * (2 * BigInt(e) - d + 1);
  return c;
}

Rational generic_count_lower(u64 q, std::size_t e, std::size_t d) {
  return Rational(ipow(q, d)) * (1 - pg_defect(q, e, d));
}

BoundReport bound_report(u64 q, std::size_t d, const FactorProfile& prof) {
  BoundReport r;
  r.q = q;
  r.e = prof.degree;
  r.d = d;
  r.k = prof.k;
  r.main = main_terms(q, r.e, d, prof);
  r.cost = cost_bounds(q, r.e, d);
  r.generic_lower = generic_count_lower(q, r.e, d);
  r.pre.k_le_d = prof.k >= 1 && prof.k <= d;
  r.pre.q_large = r.cost.theorem_applies;
  r.pre.q_exceeds_2e = q > 2 * r.e;
  if (r.pre.k_le_d) {
    r.union_bounds = union_bounds(q, d, prof);
    r.coprime = coprime_bounds(q, d, prof);
    r.avgdeg = avgdeg_bounds(q, d, prof);
  }
  return r;
}

}  // namespace euclab
