#ifndef EUCLAB_ESTIMATOR_HPP
#define EUCLAB_ESTIMATOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "euclab/factorpat.hpp"
#include "euclab/field.hpp"

namespace euclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& x);
/// "num/den", or "num" when den == 1.
std::string fraction_string(const Rational& x);
/// Fixed six decimals, ties rounded to even.
std::string format_fixed6(const Rational& x);
/// x rounded half-to-even at six decimals, as an exact rational.
Rational round6(const Rational& x);

BigInt ipow(u64 base, std::size_t exponent);

struct Interval {
  Rational lower;
  Rational upper;
};

struct MainTerms {
  Rational E_g;  // k lambda*_k / q^k
  Rational P0;   // 1 - lambda*_k / q^k
  Rational PG;   // 1 - d(2e-d+1)/(2q)
  bool k_exceeds_d = false;  // then E_g = 0, P0 = 1 exactly
};

MainTerms main_terms(u64 q, std::size_t e, std::size_t d, std::size_t k, std::size_t lambda_star_k);
MainTerms main_terms(u64 q, std::size_t e, std::size_t d, const FactorProfile& prof);

/// Bounds on |B_1 u ... u B_d| (and on the union from any i <= k). Throws
/// Error{InvalidArgument} when k > d.
Interval union_bounds(u64 q, std::size_t d, const FactorProfile& prof);

struct CoprimeBounds {
  Interval bounds;
  bool q_exceeds_2e = false;  // guarantees P0 > 1/2
  bool in_unit_interval = true;
};

CoprimeBounds coprime_bounds(u64 q, std::size_t d, const FactorProfile& prof);

struct AvgDegBounds {
  Interval bounds;
  Rational upper_eta;     // sum_{i=k}^{d} i eta_i / q^i
  Rational simple_upper;  // de / q^k
};

AvgDegBounds avgdeg_bounds(u64 q, std::size_t d, const FactorProfile& prof);

struct CostWindow {
  Rational center;
  Rational lemma_lower;  // center (1 - d(2e-d+1)/(2q))
  Rational lemma_upper;  // center (1 + de/q)
  Rational thm_lower;    // center (1 - de/q)
  Rational thm_upper;    // center (1 + de/q)
};

struct CostBounds {
  CostWindow polydiv;
  CostWindow fielddiv;
  CostWindow addmul;
  bool theorem_applies = false;  // q > d(2e-d+1)/2
};

CostBounds cost_bounds(u64 q, std::size_t e, std::size_t d);

/// q^d (1 - d(2e-d+1)/(2q)), lower bound on the number of generic f.
Rational generic_count_lower(u64 q, std::size_t e, std::size_t d);

struct Preconditions {
  bool k_le_d = false;
  bool q_large = false;  // q > d(2e-d+1)/2
  bool q_exceeds_2e = false;
};

struct BoundReport {
  u64 q = 0;
  std::size_t e = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  MainTerms main;
  std::optional<Interval> union_bounds;
  std::optional<CoprimeBounds> coprime;
  std::optional<AvgDegBounds> avgdeg;
  CostBounds cost;
  Rational generic_lower;
  Preconditions pre;
};

BoundReport bound_report(u64 q, std::size_t d, const FactorProfile& prof);

}  // namespace euclab

#endif  // EUCLAB_ESTIMATOR_HPP
