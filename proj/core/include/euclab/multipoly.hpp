#ifndef EUCLAB_MULTIPOLY_HPP
#define EUCLAB_MULTIPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "euclab/field.hpp"

namespace euclab {

/// Sparse polynomial over F_q in variables s_1..s_n. Exponent vectors are
/// keys of an ordered map; zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;
  using Terms = std::map<Exponents, FieldElem>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, FieldElem c);
  /// s_index, 1-based.
  static MultiPoly variable(std::size_t nvars, std::size_t index, FieldElem one);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Adds c * s^exps in place.
  void add_term(const FieldCtx& ctx, const Exponents& exps, FieldElem c);
  FieldElem coefficient(const Exponents& exps) const;

  /// Both return 0 for the zero polynomial.
  std::size_t total_degree() const noexcept;
  std::size_t partial_degree(std::size_t index) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

MultiPoly add(const FieldCtx& ctx, const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const FieldCtx& ctx, const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const FieldCtx& ctx, const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const FieldCtx& ctx, const MultiPoly& a, FieldElem c);

/// Throws Error{DimensionMismatch} when point.size() != nvars.
FieldElem evaluate(const FieldCtx& ctx, const MultiPoly& p, std::span<const FieldElem> point);

/// Canonical text: terms by descending total degree, then descending
/// exponent vector; e.g. "s1^2 + 4*s1*s2 + 3". Zero prints as "0".
std::string to_string(const MultiPoly& p);

}  // namespace euclab

#endif  // EUCLAB_MULTIPOLY_HPP
