#include <gtest/gtest.h>

#include <euclab/error.hpp>
#include <euclab/field.hpp>
#include <euclab/rng.hpp>

#include "test_support.hpp"

namespace euclab {
namespace {

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

TEST(Field, ConstructsPrimeFields) {
  EXPECT_EQ(ff_make(67).modulus(), 67u);
  EXPECT_EQ(ff_make(2).modulus(), 2u);
}

TEST(Field, RejectsCompositeAndTinyModuli) {
  try {
    ff_make(6);
    FAIL() << "6 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CompositeModulus);
  }
  try {
    ff_make(1);
    FAIL() << "1 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}

TEST(Field, SmallExamples) {
  EXPECT_EQ(FieldCtx(67).inv(FieldElem{2}).value, 34u);
  EXPECT_EQ(FieldCtx(3).add(FieldElem{2}, FieldElem{2}).value, 1u);
  EXPECT_EQ(FieldCtx(5).pow(FieldElem{2}, 4).value, 1u);
}

TEST(Field, InverseOfZeroThrows) {
  const FieldCtx F(7);
  try {
    F.inv(F.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(Field, PrimalityMatchesTrialDivision) {
  for (u64 n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(18446744073709551555ULL));
}

TEST(Field, FromIntReducesNegatives) {
  const FieldCtx F(7);
  EXPECT_EQ(F.from_int(-1).value, 6u);
  EXPECT_EQ(F.from_int(-14).value, 0u);
  EXPECT_EQ(F.from_int(23).value, 2u);
}

class FieldAxioms : public ::testing::TestWithParam<u64> {};

TEST_P(FieldAxioms, RandomOperationsAgreeWithWideArithmetic) {
  const FieldCtx F(GetParam());
  const u64 q = F.modulus();
  SplitMix64 rng(q);
  for (int i = 0; i < 1000; ++i) {
    const FieldElem a = testing::random_elem(F, rng), b = testing::random_elem(F, rng);
    EXPECT_EQ(F.add(a, b).value, static_cast<u64>((static_cast<u128>(a.value) + b.value) % q));
    EXPECT_EQ(F.mul(a, b).value, static_cast<u64>((static_cast<u128>(a.value) * b.value) % q));
    EXPECT_EQ(F.sub(F.add(a, b), b), a);
    EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
    if (a.value != 0) {
      EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
      EXPECT_EQ(F.pow(a, q - 1), F.one());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Moduli, FieldAxioms,
                         ::testing::Values(2, 3, 67, 409, 4294967291ULL, 18446744073709551557ULL));

}  // namespace
}  // namespace euclab
