#ifndef EUCLAB_FIELD_HPP
#define EUCLAB_FIELD_HPP

#include <compare>
#include <cstdint>
#include <ostream>

namespace euclab {

#if !defined(__SIZEOF_INT128__)
#error "euclab requires unsigned __int128 (GCC/Clang)."
#endif

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Canonical residue in [0, q). Arithmetic goes through FieldCtx.
struct FieldElem {
  u64 value = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElem x) { return os << x.value; }

bool is_prime(u64 n) noexcept;

/// Prime field F_q. Immutable after construction; every member is const and
/// thread-safe.
class FieldCtx {
 public:
  /// Throws Error{InvalidArgument} for q < 2 and Error{CompositeModulus} for
  /// composite q.
  explicit FieldCtx(u64 q);

  u64 modulus() const noexcept { return q_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1 % q_}; }

  FieldElem from_int(std::int64_t v) const noexcept;
  FieldElem from_uint(u64 v) const noexcept { return {v % q_}; }

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    const u64 gap = q_ - b.value;
    return {a.value >= gap ? a.value - gap : a.value + b.value};
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + (q_ - b.value)};
  }
  FieldElem neg(FieldElem a) const noexcept { return {a.value == 0 ? 0 : q_ - a.value}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    if (small_) return {(a.value * b.value) % q_};
    return {static_cast<u64>((static_cast<u128>(a.value) * b.value) % q_)};
  }
  /// a*b + c without intermediate reduction of the sum.
  FieldElem mul_add(FieldElem a, FieldElem b, FieldElem c) const noexcept {
    return add(mul(a, b), c);
  }

  /// Throws Error{DivisionByZero} on inv(0).
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, u64 exponent) const noexcept;

  bool operator==(const FieldCtx& other) const noexcept { return q_ == other.q_; }

 private:
  u64 q_;
  bool small_;  // q < 2^32: products fit in 64 bits
};

/// Spec-level constructor: same as FieldCtx{q}.
inline FieldCtx ff_make(u64 q) { return FieldCtx{q}; }

}  // namespace euclab

#endif  // EUCLAB_FIELD_HPP
