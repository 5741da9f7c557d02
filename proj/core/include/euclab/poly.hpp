#ifndef EUCLAB_POLY_HPP
#define EUCLAB_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "euclab/field.hpp"

namespace euclab {

/// Univariate polynomial over F_q, ascending coefficients (index i holds the
/// coefficient of T^i). The zero polynomial has an empty coefficient vector
/// and no degree; callers must branch on is_zero() before using deg().
class Poly {
 public:
  Poly() = default;
  /// Trailing zeros are trimmed. Coefficients must already be canonical.
  explicit Poly(std::vector<FieldElem> ascending);

  static Poly constant(FieldElem c);
  static Poly monomial(FieldElem c, std::size_t degree);
  /// Convenience for tests: reduces each value mod q.
  static Poly from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> ascending);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  /// Degree of a nonzero polynomial; throws Error{ZeroInput} on zero.
  std::size_t deg() const;

  FieldElem lead() const noexcept { return is_zero() ? FieldElem{} : coeffs_.back(); }
  FieldElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FieldElem{}; }
  std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_monic() const noexcept { return !is_zero() && coeffs_.back().value == 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].value == 1; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() noexcept;

  std::vector<FieldElem> coeffs_;
};

Poly add(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly sub(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly neg(const FieldCtx& ctx, const Poly& a);
Poly mul(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly scale(const FieldCtx& ctx, const Poly& a, FieldElem c);
Poly shift(const Poly& a, std::size_t k);  // a * T^k
Poly make_monic(const FieldCtx& ctx, const Poly& a);
Poly derivative(const FieldCtx& ctx, const Poly& a);
Poly pow(const FieldCtx& ctx, const Poly& a, std::size_t exponent);
FieldElem evaluate(const FieldCtx& ctx, const Poly& a, FieldElem x);
/// Monic polynomial with the given roots (with multiplicity).
Poly from_roots(const FieldCtx& ctx, std::span<const FieldElem> roots);

/// Result of schoolbook ("synthetic") division with its operation counts.
struct DivisionResult {
  Poly quotient;
  Poly remainder;
  std::size_t field_divisions = 0;  // m - n + 1 when m >= n
  std::size_t add_mul = 0;          // n (m - n + 1) when m >= n
};

/// Throws Error{DivisionByZeroPoly} when f2 is zero.
DivisionResult synthetic_division(const FieldCtx& ctx, const Poly& f1, const Poly& f2);

/// Uncounted division helpers.
Poly rem(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly quo(const FieldCtx& ctx, const Poly& a, const Poly& b);
bool divides(const FieldCtx& ctx, const Poly& d, const Poly& a);

/// Classical monic gcd (gcd(0,0) = 0).
Poly gcd(const FieldCtx& ctx, Poly a, Poly b);

/// base^exponent mod modulus by square-and-multiply.
Poly powmod(const FieldCtx& ctx, const Poly& base, u64 exponent, const Poly& modulus);

/// Text format: ascending comma-separated integer coefficients, e.g.
/// "5,2,0,1" is T^3 + 2T + 5. Integers are reduced mod q; "0" (or any list
/// of zeros) is the zero polynomial. Throws Error{ParseError}.
Poly poly_parse(const FieldCtx& ctx, std::string_view text);
/// Inverse of poly_parse; the zero polynomial formats as "0".
std::string poly_format(const Poly& p);
/// Human-readable form, e.g. "T^3 + 2*T + 5".
std::string poly_pretty(const Poly& p);

}  // namespace euclab

#endif  // EUCLAB_POLY_HPP
