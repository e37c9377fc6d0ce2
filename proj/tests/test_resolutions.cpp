#include <gtest/gtest.h>

#include "awez/resolutions.hpp"

namespace awez {
namespace {

const Field Q = Field::rationals();

void expect_resolution(const Complex& p, int n_max, int d_max) {
  CheckReport sq = check_d_squared(p, n_max, d_max);
  EXPECT_TRUE(sq.pass) << p.name() << ": " << sq.witness << " " << sq.lhs;
  CheckReport ex = check_truncated_exactness(p, n_max, d_max);
  EXPECT_TRUE(ex.pass) << p.name() << ": " << ex.witness << " " << ex.lhs << " " << ex.rhs << " | " << ex.detail;
}

// d(a . w . b) = a . d(w) . b on basis words.
void expect_bimodule_differential(const Complex& p, int n_max, int d_max, int a_budget) {
  const Algebra& a = p.algebra();
  for (int n = 1; n <= n_max; ++n)
    for (const Word& w : p.basis_up_to(n, d_max))
      for (int x : a.basis_up_to(a_budget))
        for (int y : a.basis_up_to(a_budget)) {
          Tensor lhs = p.differential(n, p.act(x, w, y, n));
          Tensor rhs = p.act(a.basis_element(x), p.differential(n, w), a.basis_element(y), n - 1);
          ASSERT_EQ(lhs, rhs) << p.format(n, w) << " with " << a.format(x) << ", " << a.format(y);
        }
}

TEST(Bar, ReducedDifferentialOnPolynomialRing) {
  PolynomialAlgebra r(Q, {"x"}, 6);
  BarComplex bar(r, true, 4);
  int x = r.parse_basis("x");
  int x2 = r.parse_basis("x^2");
  Tensor expected(Q);
  expected.add(Word{x, x, 0}, Scalar::one(Q));
  expected.add(Word{0, x2, 0}, -Scalar::one(Q));
  expected.add(Word{0, x, x}, Scalar::one(Q));
  EXPECT_EQ(bar.differential(2, Word{0, x, x, 0}), expected);
  // x (x) 1 (x) x is not a reduced word; its unit letter is dropped by project.
  EXPECT_TRUE(bar.project(Tensor(Q, Word{x, 0, x})).is_zero());
}

TEST(Bar, ResolvesPolynomialAndGroupAlgebras) {
  PolynomialAlgebra r(Q, {"x", "y"}, 6);
  expect_resolution(BarComplex(r, true, 4), 3, 3);
  expect_resolution(BarComplex(r, false, 3), 2, 2);
  FiniteGroup c3({{"g", {1, 2, 0}}});
  auto kg = c3.algebra(Field::prime(3), "kC3");
  expect_resolution(BarComplex(*kg, true, 4), 3, 0);
  expect_resolution(BarComplex(*kg, false, 3), 2, 0);
}

TEST(Bar, FilteredAlgebraUsesCumulativeBlocks) {
  auto u = RewritingAlgebra::from_text(Q, {"x", "y"}, {"y*x -> x*y + x"}, 6, "U(g)");
  expect_resolution(BarComplex(*u, true, 3), 2, 3);
}

TEST(Bar, GeneratorsAreFreeBasisWords) {
  PolynomialAlgebra r(Q, {"x"}, 4);
  BarComplex bar(r, true, 3);
  auto g = bar.generators(2, 3);
  ASSERT_EQ(g.size(), 2u);  // x (x) x^2 and x^2 (x) x
  for (const Word& w : g) {
    EXPECT_EQ(w.front(), Algebra::unit());
    EXPECT_EQ(w.back(), Algebra::unit());
  }
}

TEST(Koszul, DimensionsAreBinomial) {
  PolynomialAlgebra r(Q, {"x", "y", "z"}, 6);
  KoszulComplex k(r, 4);
  EXPECT_EQ(k.ktilde_dim(0), 1);
  EXPECT_EQ(k.ktilde_dim(1), 3);
  EXPECT_EQ(k.ktilde_dim(2), 3);
  EXPECT_EQ(k.ktilde_dim(3), 1);
  EXPECT_EQ(k.ktilde_dim(4), 0);
  expect_resolution(k, 3, 4);
}

TEST(Koszul, ResolvesAndIncludesIntoBar) {
  PolynomialAlgebra r(Field::prime(5), {"x", "y"}, 6);
  KoszulComplex k(r, 3);
  expect_resolution(k, 2, 4);
  expect_bimodule_differential(k, 2, 3, 1);
  BarComplex bar(r, true, 3);
  for (int n = 1; n <= 2; ++n)
    for (const Word& w : k.basis_up_to(n, 3)) {
      Tensor down(k.field());
      for (const auto& [v, c] : k.differential(n, w)) down.add(k.include_in_bar(n - 1, v), c);
      EXPECT_EQ(bar.differential(n, k.include_in_bar(n, w)), down) << k.format(n, w);
    }
  EXPECT_EQ(k.format(2, Word{0, 0, 0}), "1 ⊗ (x ⊗ y + 4·y ⊗ x) ⊗ 1");
}

TEST(Koszul, QuantumPlaneRelation) {
  Field f5 = Field::prime(5);
  PolynomialAlgebra x(f5, {"x"}, 6);
  PolynomialAlgebra y(f5, {"y"}, 6);
  GeneratorTwist tau(x, y, parse_generator_rules(x, y, {{{"y", "x", "2*x*y"}}}));
  TwistedProductAlgebra a(tau, "quantum plane");
  ASSERT_TRUE(a.quadratic_relations().has_value());
  KoszulComplex k(a, 3);
  EXPECT_EQ(k.ktilde_dim(2), 1);
  expect_resolution(k, 2, 4);
}

TEST(Checks, CorruptedSignIsDetected) {
  PolynomialAlgebra r(Q, {"x", "y"}, 6);
  KoszulComplex k(r, 3);
  CorruptedDifferential bad(k, 2);
  CheckReport rep = check_d_squared(bad, 3, 3);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.witness.empty());
  EXPECT_FALSE(check_truncated_exactness(bad, 2, 3).pass);
}

struct UgComplexes : ::testing::Test {
  PolynomialAlgebra R{Q, {"x"}, 8};
  PolynomialAlgebra S{Q, {"y"}, 8};
  GeneratorTwist tau{R, S, parse_generator_rules(R, S, {{{"y", "x", "x*y + x"}}})};
  TwistedProductAlgebra A{tau, "U(g)"};
  BarComplex bR{R, true, 4};
  BarComplex bS{S, true, 4};
  BarLeftTwist tl{tau, true};
  BarRightTwist tr{tau, true};
  TwistedProductComplex X{A, bR, bS, tl, tr, "X"};
};

TEST_F(UgComplexes, TwistedProductOfReducedBarsResolves) {
  expect_resolution(X, 2, 3);
  expect_bimodule_differential(X, 2, 2, 1);
}

TEST_F(UgComplexes, IntermediateComplexIsBimoduleComplex) {
  IntermediateComplex Y(A, 3);
  CheckReport sq = check_d_squared(Y, 2, 2);
  EXPECT_TRUE(sq.pass) << sq.witness;
  expect_bimodule_differential(Y, 2, 2, 1);
  for (const Word& w : Y.basis_up_to(1, 2))
    for (int a : A.basis_up_to(1))
      for (int b : A.basis_up_to(1))
        for (int c : A.basis_up_to(1)) {
          // (a b) . w = a . (b . w)
          Tensor lhs = Y.act(A.multiply(a, b), Tensor(Q, w), A.basis_element(c), 1);
          Tensor rhs = Y.act(A.basis_element(a), Y.act(b, w, c, 1), A.basis_element(Algebra::unit()), 1);
          ASSERT_EQ(lhs, rhs) << Y.format(1, w);
        }
}

struct SwapAction : ::testing::Test {
  FiniteGroup c2{{{"g", {1, 0}}}};
  std::unique_ptr<StructureConstantAlgebra> kg = c2.algebra(Q, "kC2");
  GroupHopfAlgebra hopf{c2, *kg};
  PolynomialAlgebra R{Q, {"x", "y"}, 6};
  GroupAction action{hopf, R, {{R.parse("y"), R.parse("x")}}};
  KoszulComplex K{R, 3};
};

TEST_F(SwapAction, KoszulTwistNegatesTheWedge) {
  check_koszul_admissible(action, K);
  KoszulHopfTwist tk(action, K);
  int g = kg->parse_basis("g");
  Word top{0, 0, 0};
  EXPECT_EQ(tk.apply(2, g, top), -Tensor(Q, Word{0, 0, 0, g}));
  int x = R.parse_basis("x");
  int y = R.parse_basis("y");
  // g (x) (x (x) y_1 (x) 1) -> (y (x) x_1 (x) 1) (x) g, with y_1 = letter index 1.
  EXPECT_EQ(tk.apply(1, g, Word{x, 1, 0}), Tensor(Q, Word{y, 0, 0, g}));
  EXPECT_EQ(tk.apply(1, g, Word{0, 0, y}), Tensor(Q, Word{0, 1, x, g}));
}

TEST_F(SwapAction, CoactionOfGroupBarWord) {
  int g = kg->parse_basis("g");
  Word w{g, g, 0, g};
  // Group-likes: the first leg is the product g g 1 g = g.
  EXPECT_EQ(bar_coaction(hopf, w, false), Tensor(Q, Word{g, g, g, 0, g}));
  EXPECT_EQ(iterated_coproduct(hopf, g, 3), Tensor(Q, Word{g, g, g}));
}

TEST(KoszulTwist, InhomogeneousActionIsNotAdmissible) {
  FiniteGroup c2({{"g", {1, 0}}});
  auto kg = c2.algebra(Q, "kC2");
  GroupHopfAlgebra hopf(c2, *kg);
  PolynomialAlgebra R(Q, {"x"}, 4);
  // A genuine action of C2, but it does not preserve the grading.
  GroupAction action(hopf, R, {{R.parse("1 - x")}});
  EXPECT_FALSE(check_action_axioms(action, 3).pass);
  KoszulComplex K(R, 2);
  EXPECT_THROW(check_koszul_admissible(action, K), ActionNotAdmissible);
}

}  // namespace
}  // namespace awez
