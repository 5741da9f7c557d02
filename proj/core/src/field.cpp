#include "euclab/field.hpp"

#include <array>
#include <string>

#include "euclab/error.hpp"

namespace euclab {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) noexcept {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all n < 2^64.
bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kSmall) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldCtx::FieldCtx(u64 q) : q_(q), small_(q < (u64{1} << 32)) {
  if (q < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2, got " + std::to_string(q));
  if (!is_prime(q)) throw Error(Errc::CompositeModulus, std::to_string(q) + " is not prime");
}

FieldElem FieldCtx::from_int(std::int64_t v) const noexcept {
  if (v >= 0) return {static_cast<u64>(v) % q_};
  // -(v+1) avoids overflow at INT64_MIN.
  u64 m = (static_cast<u64>(-(v + 1)) % q_ + 1) % q_;
  return {m == 0 ? 0 : q_ - m};
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.value == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  // Extended Euclid on (a, q); q is prime so gcd is 1.
  __int128 t0 = 0, t1 = 1;
  u64 r0 = q_, r1 = a.value;
  while (r1 != 0) {
    u64 quot = r0 / r1;
    u64 r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - static_cast<__int128>(quot) * t1;
    t0 = t1;
    t1 = t2;
  }
  __int128 m = t0 % static_cast<__int128>(q_);
  if (m < 0) m += q_;
  return {static_cast<u64>(m)};
}

FieldElem FieldCtx::pow(FieldElem a, u64 exponent) const noexcept {
  FieldElem r = one();
  while (exponent) {
    if (exponent & 1) r = mul(r, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return r;
}

}  // namespace euclab
