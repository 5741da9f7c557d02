#ifndef EUCLAB_CENSUS_HPP
#define EUCLAB_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "euclab/estimator.hpp"
#include "euclab/field.hpp"
#include "euclab/poly.hpp"

namespace euclab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// Monic f of degree d at enumeration index `index`: base-q digits of the
/// index give s_1, s_2, ..., s_d (s_1 varies fastest), where s_i is the
/// coefficient of T^{d-i}.
Poly enumerate_monic(const FieldCtx& ctx, std::size_t d, std::uint64_t index);

/// q^d, or nullopt if it overflows 64 bits.
std::optional<std::uint64_t> monic_count(u64 q, std::size_t d);

struct CensusReport {
  u64 q = 0;
  std::size_t e = 0;
  std::size_t d = 0;
  Poly g;
  std::uint64_t total = 0;               // q^d
  std::vector<std::uint64_t> B;          // |B_0| .. |B_d|
  std::vector<std::uint64_t> union_from; // entry i-1: |B_i u ... u B_d|, i = 1..d
  std::uint64_t generic_count = 0;
  std::uint64_t sum_polydiv = 0;
  std::uint64_t sum_fielddiv = 0;
  std::uint64_t sum_addmul = 0;
  Rational E_X;
  Rational P0;
  Rational E_polydiv;
  Rational E_fielddiv;
  Rational E_addmul;
};

/// Runs the Euclidean algorithm on (g, f) for every monic f of degree d.
/// Throws Error{EnumerationTooLarge} when q^d > cap.
CensusReport exact_distribution(const FieldCtx& ctx, const Poly& g, std::size_t d,
                                 std::uint64_t cap = kDefaultEnumerationCap);

struct CharacterizationFlags {
  std::uint64_t checked = 0;
  bool resultant_ok = true;              // gcd != 1  <=>  res(g, f) = 0
  std::optional<bool> generic_ok;        // generic  <=>  all G_k(s(f)) != 0
  std::string first_failure;             // empty when every check held
};

/// generic_ok is empty when the leading-coefficient polynomials are not
/// available for this (e, d).
CharacterizationFlags verify_characterizations(const FieldCtx& ctx, const Poly& g, std::size_t d,
                                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace euclab

#endif  // EUCLAB_CENSUS_HPP
