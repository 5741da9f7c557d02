#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <euclab/census.hpp>
#include <euclab/error.hpp>
#include <euclab/euclid.hpp>
#include <euclab/genlead.hpp>
#include <euclab/symschur.hpp>

#include "test_support.hpp"

namespace euclab {
namespace {

TEST(CompleteFromPoly, Examples) {
  const FieldCtx F5(5), F3(3);
  const auto s = complete_from_poly(F5, Poly::from_ints(F5, {2, 2, 1}), 2);
  EXPECT_EQ(s, (std::vector<FieldElem>{{1}, {3}, {2}}));
  const Alphabet A{{FieldElem{1}, FieldElem{2}}};
  const auto from_alphabet = complete(F5, A, 6);
  const auto from_poly = complete_from_poly(F5, from_roots(F5, A.elements), 6);
  for (std::size_t i = 0; i <= 6; ++i) EXPECT_EQ(from_poly[i], from_alphabet.at(i));
  const auto zero = complete_from_poly(F5, Poly::from_ints(F5, {0, 0, 0, 1}), 4);
  EXPECT_EQ(zero, (std::vector<FieldElem>{{1}, {0}, {0}, {0}, {0}}));
  const auto alt = complete_from_poly(F3, Poly::from_ints(F3, {1, 0, 1}), 5);
  EXPECT_EQ(alt, (std::vector<FieldElem>{{1}, {0}, {2}, {0}, {1}, {0}}));
}

TEST(GenericCoordinates, ReadsCoefficientsFromTheTop) {
  const FieldCtx F(7);
  EXPECT_EQ(generic_coordinates(Poly::from_ints(F, {3, 2, 1, 1})), (std::vector<FieldElem>{{1}, {2}, {3}}));
}

TEST(GenericLead, CubeOverF3) {
  const FieldCtx F(3);
  const GenericLeadSet set = generic_lead(F, Poly::from_ints(F, {0, 0, 0, 1}), 2);
  ASSERT_EQ(set.leads.size(), 2u);
  EXPECT_EQ(to_string(set.G(1)), "s1^2 + 2*s2");
  for (const Poly& f : testing::all_monic(F, 2)) {
    const FieldElem a = f.coeff(1), b = f.coeff(0);
    const FieldElem expect = F.sub(F.mul(a, a), b);
    EXPECT_EQ(eval_multipoly(F, set.G(1), generic_coordinates(f)), expect);
  }
}

TEST(GenericLead, SmallestShapes) {
  const FieldCtx F(67);
  SplitMix64 rng(2);
  const GenericLeadSet set = generic_lead(F, testing::random_monic(F, rng, 4), 3);
  EXPECT_EQ(set.G(1).total_degree(), 2u);
  const GenericLeadSet seven = generic_lead(F, testing::random_monic(F, rng, 7), 3);
  EXPECT_EQ(seven.G(1).total_degree(), 5u);
  EXPECT_EQ(seven.G(1).partial_degree(1), 5u);
  EXPECT_EQ(seven.G(1).coefficient({5, 0, 0}).value, 1u);
}

TEST(GenericLead, RejectsBadShapes) {
  const FieldCtx F(5);
  const Poly g = Poly::from_ints(F, {1, 0, 0, 1});
  EXPECT_THROW(generic_lead(F, g, 3), Error);
  EXPECT_THROW(generic_lead(F, g, 0), Error);
  try {
    generic_lead(F, Poly::monomial(F.one(), 14), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(GenericLead, StructureOfEveryLead) {
  for (u64 q : {67, 127}) {
    const FieldCtx F(q);
    SplitMix64 rng(q);
    for (std::size_t e = 2; e <= 7; ++e) {
      for (std::size_t d = 1; d < e && d <= 4; ++d) {
        const GenericLeadSet set = generic_lead(F, testing::random_monic(F, rng, e), d);
        for (std::size_t k = 1; k <= d; ++k) {
          const GenericLead& L = set.leads[k - 1];
          const std::size_t deg = e - d + k;
          EXPECT_EQ(L.poly.total_degree(), deg);
          EXPECT_EQ(L.poly.partial_degree(k), deg);
          MultiPoly::Exponents top(d, 0);
          top[k - 1] = static_cast<std::uint16_t>(deg);
          EXPECT_EQ(L.poly.coefficient(top).value, 1u);
          EXPECT_EQ(L.monic_scalar.value, 1u);
        }
      }
    }
  }
}

// Leading coefficients along the actual chain, with generic degrees required
// through step k - 1.
TEST(GenericLead, AgreesWithEuclidLeadingCoefficients) {
  const FieldCtx F(5);
  SplitMix64 rng(32);
  for (std::size_t e = 2; e <= 5; ++e) {
    for (std::size_t d = 1; d < e && d <= 3; ++d) {
      for (int rep = 0; rep < 2; ++rep) {
        const Poly g = testing::random_monic(F, rng, e);
        const GenericLeadSet set = generic_lead(F, g, d);
        for (const Poly& f : testing::all_monic(F, d)) {
          const EuclidTrace t = euclid_trace(F, g, f);
          const auto s = generic_coordinates(f);
          FieldElem prefix = F.one();
          for (std::size_t k = 1; k <= d; ++k) {
            const int sigma = validated_remainder_sign(e, d, k);
            const FieldElem v = eval_multipoly(F, set.G(k), s);
            const bool has = t.length() >= k && t.remainders[k - 1].deg() == d - k;
            const FieldElem lc = has ? t.remainders[k - 1].lead() : FieldElem{};
            const FieldElem expect = F.mul(prefix, lc);
            EXPECT_EQ(v, sigma > 0 ? expect : F.neg(expect)) << "g=" << poly_format(g) << " f=" << poly_format(f);
            if (!has) break;
            prefix = F.mul(prefix, F.mul(lc, lc));
          }
          bool all_nonzero = true;
          for (std::size_t k = 1; k <= d; ++k) all_nonzero = all_nonzero && eval_multipoly(F, set.G(k), s).value;
          EXPECT_EQ(all_nonzero, is_generic(t, d));
        }
        for (const GenericLead& L : set.leads)
          if (L.euclid_scalar) { EXPECT_EQ(L.euclid_scalar->value, validated_remainder_sign(e, d, L.k) > 0 ? 1u : 4u); }
      }
    }
  }
}

TEST(GenericLead, Golden) {
  const FieldCtx F(5);
  const GenericLeadSet set = generic_lead(F, Poly::from_ints(F, {1, 2, 0, 3, 0, 1}), 3);
  std::ostringstream got;
  for (std::size_t k = 1; k <= 3; ++k) got << "G" << k << " = " << to_string(set.G(k)) << "\n";
  std::ifstream in(std::string(EUCLAB_GOLDEN_DIR) + "/genlead_q5_e5_d3.txt");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(got.str(), want.str());
}

}  // namespace
}  // namespace euclab
