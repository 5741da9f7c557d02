#include <gtest/gtest.h>

#include <euclab/error.hpp>
#include <euclab/multipoly.hpp>

namespace euclab {
namespace {

TEST(MultiPoly, ArithmeticAndPrinting) {
  const FieldCtx F(3);
  const MultiPoly s1 = MultiPoly::variable(2, 1, F.one());
  const MultiPoly s2 = MultiPoly::variable(2, 2, F.one());
  const MultiPoly p = add(F, mul(F, s1, s1), scale(F, s2, FieldElem{2}));
  EXPECT_EQ(to_string(p), "s1^2 + 2*s2");
  EXPECT_EQ(p.total_degree(), 2u);
  EXPECT_EQ(p.partial_degree(1), 2u);
  EXPECT_EQ(p.partial_degree(2), 1u);
  EXPECT_EQ(p.coefficient({2, 0}).value, 1u);
  EXPECT_EQ(p.coefficient({1, 1}).value, 0u);
  EXPECT_THROW(p.partial_degree(3), Error);

  const MultiPoly zero = sub(F, p, p);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(to_string(zero), "0");
  EXPECT_EQ(zero.total_degree(), 0u);

  const MultiPoly c = MultiPoly::constant(2, FieldElem{2});
  EXPECT_EQ(to_string(add(F, mul(F, s1, s2), c)), "s1*s2 + 2");
  EXPECT_THROW(add(F, s1, MultiPoly::variable(3, 1, F.one())), Error);
}

TEST(MultiPoly, EvaluationMatchesArithmetic) {
  const FieldCtx F(67);
  const MultiPoly s1 = MultiPoly::variable(3, 1, F.one());
  const MultiPoly s2 = MultiPoly::variable(3, 2, F.one());
  const MultiPoly s3 = MultiPoly::variable(3, 3, F.one());
  const MultiPoly a = add(F, mul(F, s1, s2), s3);
  const MultiPoly b = sub(F, mul(F, s3, s3), s1);
  const std::vector<FieldElem> pt{{5}, {11}, {60}};
  const FieldElem ea = evaluate(F, a, pt), eb = evaluate(F, b, pt);
  EXPECT_EQ(ea.value, (55 + 60) % 67);
  EXPECT_EQ(evaluate(F, mul(F, a, b), pt), F.mul(ea, eb));
  EXPECT_EQ(evaluate(F, add(F, a, b), pt), F.add(ea, eb));
  EXPECT_EQ(evaluate(F, MultiPoly(3), pt).value, 0u);
  EXPECT_THROW(evaluate(F, a, std::vector<FieldElem>{{1}}), Error);
}

TEST(MultiPoly, AddTermCancels) {
  const FieldCtx F(5);
  MultiPoly p(2);
  p.add_term(F, {1, 2}, FieldElem{3});
  p.add_term(F, {1, 2}, FieldElem{2});
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, MultiPoly(2));
}

}  // namespace
}  // namespace euclab
