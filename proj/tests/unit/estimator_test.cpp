#include <gtest/gtest.h>

#include <euclab/error.hpp>
#include <euclab/estimator.hpp>

namespace euclab {
namespace {

FactorProfile fake_profile(std::vector<std::size_t> lambda_star, std::vector<std::size_t> lambda = {}) {
  FactorProfile p;
  p.lambda_star = lambda_star;
  p.lambda = lambda.empty() ? lambda_star : lambda;
  for (std::size_t i = 0; i < p.lambda.size(); ++i) p.degree += (i + 1) * p.lambda[i];
  p.k = 0;
  for (std::size_t i = 0; i < lambda_star.size() && !p.k; ++i)
    if (lambda_star[i]) p.k = i + 1;
  for (std::size_t i = 0; i < lambda_star.size(); ++i)
    if (lambda_star[i]) p.degree_multiplicity[{i + 1, 1}] = lambda_star[i];
  return p;
}

Rational R(long long n, long long d = 1) { return Rational(n, d); }

TEST(Format, HalfEvenAtSixDecimals) {
  EXPECT_EQ(format_fixed6(R(1, 67)), "0.014925");
  EXPECT_EQ(format_fixed6(R(1, 2000000)), "0.000000");
  EXPECT_EQ(format_fixed6(R(3, 2000000)), "0.000002");
  EXPECT_EQ(format_fixed6(R(-1, 3)), "-0.333333");
  EXPECT_EQ(format_fixed6(R(5)), "5.000000");
  EXPECT_EQ(round6(R(1, 2000000)), R(0));
  EXPECT_EQ(fraction_string(R(4, 9)), "4/9");
  EXPECT_EQ(fraction_string(R(3)), "3");
  EXPECT_DOUBLE_EQ(to_double(R(1, 4)), 0.25);
  EXPECT_EQ(ipow(67, 3), BigInt(300763));
}

TEST(MainTerms, Examples) {
  MainTerms m = main_terms(67, 7, 3, 1, 1);
  EXPECT_EQ(m.E_g, R(1, 67));
  EXPECT_EQ(format_fixed6(m.E_g), "0.014925");
  EXPECT_EQ(format_fixed6(m.P0), "0.985075");
  EXPECT_EQ(format_fixed6(m.PG), "0.731343");
  EXPECT_FALSE(m.k_exceeds_d);

  m = main_terms(67, 7, 3, 2, 2);
  EXPECT_EQ(m.E_g, R(4, 4489));
  EXPECT_EQ(format_fixed6(m.E_g), "0.000891");

  m = main_terms(211, 17, 7, 2, 1);
  EXPECT_EQ(m.PG, R(1) - R(196, 422));
  EXPECT_EQ(format_fixed6(m.PG), "0.535545");

  m = main_terms(67, 9, 3, 4, 1);
  EXPECT_TRUE(m.k_exceeds_d);
  EXPECT_EQ(m.E_g, R(0));
  EXPECT_EQ(m.P0, R(1));
}

TEST(UnionBounds, Examples) {
  Interval b = union_bounds(3, 2, fake_profile({1, 0, 0}));
  EXPECT_EQ(b.lower, R(3));
  EXPECT_EQ(b.upper, R(3));
  b = union_bounds(3, 2, fake_profile({1, 1}));
  EXPECT_EQ(b.upper, R(4));
  b = union_bounds(67, 3, fake_profile({0, 1, 0, 0}));
  EXPECT_EQ(b.lower, R(67));
  EXPECT_EQ(b.upper, R(67));
  b = union_bounds(67, 3, fake_profile({7}));
  EXPECT_EQ(b.lower, R(30016));
  EXPECT_EQ(b.upper, R(7 * 67 * 67));
  EXPECT_THROW(union_bounds(67, 1, fake_profile({0, 1})), Error);
}

TEST(CoprimeBounds, Examples) {
  CoprimeBounds c = coprime_bounds(67, 3, fake_profile({1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(c.bounds.lower, R(66, 67));
  EXPECT_EQ(c.bounds.upper, R(66, 67));
  EXPECT_TRUE(c.q_exceeds_2e);
  c = coprime_bounds(3, 2, fake_profile({1, 0, 0}, {3, 0, 0}));
  EXPECT_EQ(c.bounds.lower, R(2, 3));
  EXPECT_EQ(c.bounds.upper, R(2, 3));
  c = coprime_bounds(5, 2, fake_profile({2}));
  EXPECT_EQ(c.bounds.upper, R(1) - R(2, 5) + R(1, 25));
  EXPECT_TRUE(c.in_unit_interval);
}

TEST(AvgDegBounds, Examples) {
  AvgDegBounds a = avgdeg_bounds(3, 2, fake_profile({1, 0, 0}, {3, 0, 0}));
  EXPECT_EQ(a.bounds.lower, R(1, 3));
  EXPECT_EQ(a.bounds.upper, R(1));
  EXPECT_EQ(a.simple_upper, R(2 * 3, 3));
  EXPECT_EQ(format_fixed6(main_terms(67, 7, 3, 1, 3).E_g), "0.044776");
  a = avgdeg_bounds(67, 3, fake_profile({0, 1, 0, 0, 1}));
  EXPECT_EQ(a.bounds.lower, R(2, 4489));
  EXPECT_EQ(a.bounds.upper, R(2, 4489));
}

TEST(CostBounds, Examples) {
  const CostBounds c = cost_bounds(67, 7, 3);
  EXPECT_EQ(c.polydiv.center, R(4));
  EXPECT_EQ(c.polydiv.lemma_lower, R(4) * (R(1) - R(36, 134)));
  EXPECT_EQ(c.polydiv.lemma_upper, R(4) * (R(1) + R(21, 67)));
  EXPECT_EQ(format_fixed6(c.polydiv.lemma_lower), "2.925373");
  EXPECT_EQ(format_fixed6(c.polydiv.lemma_upper), "5.253731");
  EXPECT_EQ(c.fielddiv.center, R(11));
  EXPECT_EQ(c.addmul.center, R(21));
  EXPECT_TRUE(c.theorem_applies);

  const CostBounds big = cost_bounds(4294967291ULL, 7, 3);
  EXPECT_LT(to_double(big.addmul.thm_upper) - 21.0, 1e-6);
  EXPECT_LT(21.0 - to_double(big.addmul.thm_lower), 1e-6);
}

TEST(BoundReport, PairsAreOrderedAroundTheirCenters) {
  for (u64 q : {67u, 127u, 409u}) {
    for (std::size_t l = 1; l <= 7; ++l) {
      std::vector<std::size_t> ls(9, 0);
      ls[0] = l;
      const BoundReport r = bound_report(q, 3, fake_profile(ls));
      ASSERT_TRUE(r.pre.k_le_d);
      ASSERT_TRUE(r.pre.q_large);
      EXPECT_LE(r.union_bounds->lower, r.union_bounds->upper);
      EXPECT_LE(r.coprime->bounds.lower, r.main.P0);
      EXPECT_LE(r.main.P0, r.coprime->bounds.upper);
      EXPECT_LE(r.avgdeg->bounds.lower, r.main.E_g);
      EXPECT_LE(r.main.E_g, r.avgdeg->bounds.upper);
      for (const CostWindow* w : {&r.cost.polydiv, &r.cost.fielddiv, &r.cost.addmul}) {
        EXPECT_LE(w->lemma_lower, w->center);
        EXPECT_LE(w->thm_lower, w->center);
        EXPECT_LE(w->center, w->thm_upper);
      }
    }
  }
  const BoundReport r = bound_report(67, 3, fake_profile({0, 0, 0, 1}));
  EXPECT_FALSE(r.pre.k_le_d);
  EXPECT_FALSE(r.union_bounds.has_value());
  EXPECT_TRUE(r.main.k_exceeds_d);
}

TEST(GenericCount, LowerBound) {
  EXPECT_EQ(generic_count_lower(67, 7, 3), R(67 * 67 * 67) * (R(1) - R(36, 134)));
}

}  // namespace
}  // namespace euclab
