#include <gtest/gtest.h>

#include <euclab/error.hpp>
#include <euclab/euclid.hpp>
#include <euclab/symschur.hpp>

#include "test_support.hpp"

namespace euclab {
namespace {

Alphabet alpha(std::initializer_list<u64> xs) {
  Alphabet a;
  for (u64 x : xs) a.elements.push_back(FieldElem{x});
  return a;
}

Alphabet random_alphabet(const FieldCtx& F, SplitMix64& rng, std::size_t n) {
  Alphabet a;
  for (std::size_t i = 0; i < n; ++i) a.elements.push_back(testing::random_elem(F, rng));
  return a;
}

std::vector<u64> values(const SymSeries& s) {
  std::vector<u64> v;
  for (FieldElem x : s.coeffs()) v.push_back(x.value);
  return v;
}

TEST(Series, CompleteAndElementaryExamples) {
  const FieldCtx F(5);
  const auto ce = complete_and_elementary(F, alpha({1, 2}), 4);
  EXPECT_EQ(values(ce.S), (std::vector<u64>{1, 3, 2, 0, 1}));  // 2^{i+1} - 1 mod 5
  EXPECT_EQ(values(ce.Lambda), (std::vector<u64>{1, 3, 2, 0, 0}));
  EXPECT_EQ(values(complete(F, Alphabet{}, 3)), (std::vector<u64>{1, 0, 0, 0}));
  EXPECT_EQ(values(complete(F, alpha({3}), 3)), (std::vector<u64>{1, 3, 4, 2}));
  EXPECT_EQ(ce.S.at(-2).value, 0u);
  EXPECT_THROW(ce.S.at(5), Error);
}

TEST(Series, DifferenceExamples) {
  const FieldCtx F(5);
  EXPECT_EQ(values(s_difference(F, alpha({1, 2}), alpha({1}), 4)), (std::vector<u64>{1, 2, 4, 3, 1}));
  EXPECT_EQ(s_difference(F, alpha({1, 2}), Alphabet{}, 4), complete(F, alpha({1, 2}), 4));
  EXPECT_EQ(values(s_difference(F, alpha({3, 4, 4}), alpha({4, 3, 4}), 4)), (std::vector<u64>{1, 0, 0, 0, 0}));
}

TEST(Series, CauchyFormulas) {
  const FieldCtx F(67);
  SplitMix64 rng(500);
  for (int i = 0; i < 500; ++i) {
    const Alphabet A = random_alphabet(F, rng, rng.below(6));
    const Alphabet B = random_alphabet(F, rng, rng.below(6));
    const std::size_t N = 12;
    const auto ab = complete_and_elementary(F, concat(A, B), N);
    const auto a = complete_and_elementary(F, A, N);
    const auto b = complete_and_elementary(F, B, N);
    for (std::size_t n = 0; n <= N; ++n) {
      FieldElem s{}, l{};
      for (std::size_t j = 0; j <= n; ++j) {
        s = F.add(s, F.mul(a.S.at(j), b.S.at(n - j)));
        l = F.add(l, F.mul(a.Lambda.at(j), b.Lambda.at(n - j)));
      }
      ASSERT_EQ(ab.S.at(n), s);
      ASSERT_EQ(ab.Lambda.at(n), l);
    }
    ASSERT_EQ(s_difference(F, A, B, N), s_difference_cauchy(F, A, B, N));
  }
}

TEST(Series, NewtonRecurrenceAndRoots) {
  const FieldCtx F(67);
  SplitMix64 rng(200);
  for (int i = 0; i < 200; ++i) {
    const Alphabet A = random_alphabet(F, rng, 1 + rng.below(7));
    const auto ce = complete_and_elementary(F, A, 15);
    for (std::size_t n = 1; n <= 15; ++n) {
      FieldElem acc{};
      for (std::size_t j = 0; j <= n; ++j) {
        const FieldElem t = F.mul(ce.Lambda.at(j), ce.S.at(n - j));
        acc = j % 2 ? F.sub(acc, t) : F.add(acc, t);
      }
      ASSERT_EQ(acc.value, 0u);
    }
    for (std::size_t n = A.size() + 1; n <= 15; ++n) ASSERT_EQ(ce.Lambda.at(n).value, 0u);
    // S^e(T - A) = prod (T - a): coefficient of T^j is (-1)^{e-j} Lambda^{e-j}(A).
    const Poly roots = from_roots(F, A.elements);
    const std::size_t e = A.size();
    for (std::size_t j = 0; j <= e; ++j) {
      const FieldElem lam = ce.Lambda.at(e - j);
      ASSERT_EQ(roots.coeff(j), (e - j) % 2 ? F.neg(lam) : lam);
    }
  }
}

TEST(Determinants, SchurExamples) {
  const FieldCtx F(5);
  const SymSeries S = complete(F, alpha({1, 2}), 8);
  const std::vector<std::size_t> j11{1, 1}, j3{3}, j000{0, 0, 0}, none{};
  EXPECT_EQ(schur_det(F, j11, S).value, 2u);
  EXPECT_EQ(schur_det(F, j3, S), S.at(3));
  EXPECT_EQ(schur_det(F, j000, S).value, 1u);
  EXPECT_EQ(schur_det(F, none, S).value, 1u);
}

TEST(Determinants, EliminationMatchesLeibniz) {
  const FieldCtx F(67);
  SplitMix64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.below(6);
    FieldMatrix M(n, std::vector<FieldElem>(n));
    for (auto& row : M)
      for (auto& x : row) x = rng.below(3) ? testing::random_elem(F, rng) : FieldElem{};
    EXPECT_EQ(field_det(F, M), testing::leibniz_det(F, M));
  }
}

TEST(Lascoux, IdentityHoldsOnRandomInstances) {
  const FieldCtx F(67);
  SplitMix64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const std::vector<std::size_t> J{rng.below(5), rng.below(5), rng.below(5)};
    const std::size_t k = rng.below(4);
    const Alphabet A = random_alphabet(F, rng, 4), B = random_alphabet(F, rng, 2);
    const FieldElem t = i % 10 == 0 ? FieldElem{} : testing::random_elem(F, rng);
    EXPECT_TRUE(lascoux_148_check(F, J, k, A, B, t));
  }
  const std::vector<std::size_t> J{1, 2, 0};
  EXPECT_TRUE(lascoux_148_check(F, J, 0, alpha({1, 2, 3, 4}), alpha({5, 6}), FieldElem{7}));
}

TEST(Remainder, MatchesEuclidUpToValidatedScalar) {
  const FieldCtx F(67);
  SplitMix64 rng(315);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t e = 2 + rng.below(5);
    const std::size_t d = 1 + rng.below(std::min<std::size_t>(e - 1, 3));
    const std::size_t k = 1 + rng.below(d);
    const Alphabet A = random_alphabet(F, rng, e), B = random_alphabet(F, rng, d);
    const RemainderCalibration c = calibrate_remainder(F, k, A, B);
    if (!c.generic_prefix) continue;
    ++compared;
    EXPECT_TRUE(c.proportional);
    const int sigma = validated_remainder_sign(e, d, k);
    EXPECT_EQ(c.nu, sigma > 0 ? F.one() : F.neg(F.one()));

    // Direct check of the chain: ratio * r_k equals the formula value.
    const EuclidTrace t = euclid_trace(F, from_roots(F, A.elements), from_roots(F, B.elements));
    const Poly R = remainder_via_schur(F, k, A, B);
    EXPECT_EQ(R, scale(F, t.remainders[k - 1], c.ratio));
    EXPECT_LE(R.is_zero() ? 0 : R.deg(), d - k);
  }
  EXPECT_GT(compared, 150);
}

TEST(Remainder, SmallestCaseUsesEmptyDeterminant) {
  const FieldCtx F(67);
  const Alphabet A = alpha({1, 2}), B = alpha({5});
  const RemainderCalibration c = calibrate_remainder(F, 1, A, B);
  ASSERT_TRUE(c.generic_prefix);
  EXPECT_TRUE(c.proportional);
  // r_1 = g(5) for g = (T-1)(T-2): the remainder is the constant 12.
  const Poly R = remainder_via_schur(F, 1, A, B);
  EXPECT_EQ(R, scale(F, Poly::constant(FieldElem{12}), c.ratio));
  EXPECT_THROW(remainder_via_schur(F, 2, A, B), Error);
}

TEST(Remainder, LiteralSignDoesNotMatchEuclid) {
  const FieldCtx F(67);
  const Alphabet A = alpha({1, 2}), B = alpha({5});
  EXPECT_FALSE(calibrate_remainder(F, 1, A, B, RemainderSign::Literal).proportional);
}

}  // namespace
}  // namespace euclab
