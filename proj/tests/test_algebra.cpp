#include <gtest/gtest.h>

#include "awez/algebra.hpp"

namespace awez {
namespace {

const Field Q = Field::rationals();

std::vector<std::string> names(const Algebra& a, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int i : ids) out.push_back(a.format(i));
  return out;
}

TEST(Polynomial, NormalizesCommutativeProducts) {
  PolynomialAlgebra r(Q, {"x", "y"}, 4);
  EXPECT_EQ(r.format(r.multiply(r.parse("y"), r.parse("x"))), "x*y");
  EXPECT_EQ(r.format(r.parse("(x + y)^2")), "x^2 + 2*x*y + y^2");
  EXPECT_EQ(names(r, r.graded_basis(2)), (std::vector<std::string>{"x^2", "x*y", "y^2"}));
  PolynomialAlgebra k1(Q, {"x"}, 4);
  EXPECT_EQ(names(k1, k1.graded_basis(3)), (std::vector<std::string>{"x^3"}));
}

TEST(Polynomial, BudgetExceededCarriesDegree) {
  PolynomialAlgebra r(Q, {"x"}, 3);
  int x2 = r.parse_basis("x^2");
  try {
    r.multiply(x2, x2);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.degree(), 4);
  }
}

TEST(Polynomial, FormatParseRoundTrip) {
  PolynomialAlgebra r(Field::prime(5), {"x", "y", "z"}, 4);
  for (int id = 0; id < r.size(); ++id) EXPECT_EQ(r.parse_basis(r.format(id)), id);
  Element e = r.parse("3*x*y - 2/3*z^2 + 1");
  EXPECT_EQ(r.parse(r.format(e)), e);
}

TEST(Polynomial, ProjectReduced) {
  PolynomialAlgebra r(Q, {"x"}, 3);
  EXPECT_EQ(r.format(r.project_reduced(r.parse("3 + 2*x"))), "2*x");
  EXPECT_TRUE(r.project_reduced(r.parse("1")).is_zero());
  Element e = r.parse("5 - x + x^3");
  EXPECT_EQ(r.project_reduced(r.project_reduced(e)), r.project_reduced(e));
}

TEST(Group, CyclicOfOrderTwo) {
  FiniteGroup c2({{"g", {1, 0}}});
  ASSERT_EQ(c2.order(), 2);
  auto kg = c2.algebra(Q, "kC2");
  int g = kg->parse_basis("g");
  EXPECT_EQ(kg->multiply(g, g), Element(Q, Algebra::unit()));
  EXPECT_EQ(names(*kg, kg->graded_basis(0)), (std::vector<std::string>{"1", "g"}));
}

TEST(Group, SymmetricGroupOnThreePoints) {
  FiniteGroup s3({{"s", {1, 0, 2}}, {"t", {0, 2, 1}}});
  ASSERT_EQ(s3.order(), 6);
  auto kg = s3.algebra(Q, "kS3");
  for (int g = 0; g < 6; ++g) {
    EXPECT_EQ(s3.multiply(g, s3.inverse(g)), 0);
    EXPECT_EQ(kg->parse_basis(kg->format(g)), g);
    if (g == 0) continue;
    auto [a, rest] = *kg->split_left(g);
    EXPECT_EQ(kg->multiply(a, rest), Element(Q, g));
  }
}

void expect_associative_unital(const Algebra& a, int budget) {
  auto basis = a.basis_up_to(budget);
  for (int u : basis) {
    EXPECT_EQ(a.multiply(Algebra::unit(), u), Element(a.field(), u));
    EXPECT_EQ(a.multiply(u, Algebra::unit()), Element(a.field(), u));
    for (int v : basis)
      for (int w : basis) {
        if (a.degree(u) + a.degree(v) + a.degree(w) > budget) continue;
        EXPECT_EQ(a.multiply(a.multiply(u, v), Element(a.field(), w)),
                  a.multiply(Element(a.field(), u), a.multiply(v, w)));
      }
  }
}

TEST(Rewriting, EnvelopingAlgebraOfTwoDimensionalLieAlgebra) {
  auto u = RewritingAlgebra::from_text(Q, {"x", "y"}, {"y*x -> x*y + x"}, 5, "U(g)");
  EXPECT_FALSE(u->graded());
  EXPECT_EQ(u->format(u->parse("y*x")), "x + x*y");
  EXPECT_EQ(u->format(u->project_reduced(u->parse("y*x"))), "x + x*y");
  // y x^2 = x^2 y + 2 x^2
  EXPECT_EQ(u->format(u->parse("y*x^2")), "2*x^2 + x^2*y");
  expect_associative_unital(*u, 5);
}

TEST(Rewriting, AssociativityOfOtherFamilies) {
  PolynomialAlgebra r(Q, {"x", "y"}, 5);
  expect_associative_unital(r, 5);
  FiniteGroup s3({{"s", {1, 0, 2}}, {"t", {0, 2, 1}}});
  expect_associative_unital(*s3.algebra(Field::prime(3), "kS3"), 0);
}

}  // namespace
}  // namespace awez
