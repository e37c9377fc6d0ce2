#include <gtest/gtest.h>

#include "awez/twist.hpp"

namespace awez {
namespace {

const Field Q = Field::rationals();

Tensor rs(const Algebra& r, const Algebra& s, const std::string& rw, const std::string& sw, long c = 1) {
  return Tensor(Word{r.parse_basis(rw), s.parse_basis(sw)}, Scalar(r.field(), c));
}

struct UgFixture : ::testing::Test {
  PolynomialAlgebra R{Q, {"x"}, 8};
  PolynomialAlgebra S{Q, {"y"}, 8};
  GeneratorTwist tau{R, S, parse_generator_rules(R, S, {{{"y", "x", "x*y + x"}}})};
};

TEST_F(UgFixture, ExtendsFromTheGeneratorRule) {
  int y = S.parse_basis("y");
  EXPECT_EQ(tau.apply(y, R.parse_basis("x^2")), rs(R, S, "x^2", "y") + rs(R, S, "x^2", "1", 2));
  EXPECT_EQ(tau.apply(Algebra::unit(), R.parse_basis("x^3")), rs(R, S, "x^3", "1"));
  EXPECT_FALSE(tau.strongly_graded());
}

TEST_F(UgFixture, HexagonHolds) {
  CheckReport rep = check_twist_axiom(tau, 3);
  EXPECT_TRUE(rep.pass) << rep.witness << ": " << rep.lhs << " vs " << rep.rhs;
  EXPECT_TRUE(check_twist_axiom(tau, 6).pass);
}

TEST_F(UgFixture, InverseOnExampleAndUnits) {
  Tensor expected(Q);
  expected.add(Word{S.parse_basis("y"), R.parse_basis("x")}, Scalar::one(Q));
  expected.add(Word{Algebra::unit(), R.parse_basis("x")}, -Scalar::one(Q));
  EXPECT_EQ(tau.apply_inverse(R.parse_basis("x"), S.parse_basis("y")), expected);
  EXPECT_EQ(tau.apply_inverse(R.parse_basis("x^2"), Algebra::unit()),
            Tensor(Q, Word{Algebra::unit(), R.parse_basis("x^2")}));
  CheckReport rep = check_twist_inverse(tau, 6);
  EXPECT_TRUE(rep.pass) << rep.witness;
}

TEST_F(UgFixture, TwistedProductMatchesRewritingPresentation) {
  TwistedProductAlgebra a(tau);
  auto u = RewritingAlgebra::from_text(Q, {"x", "y"}, {"y*x -> x*y + x"}, 8);
  EXPECT_EQ(a.format(a.parse("y*x")), "x + x*y");
  for (int i : a.basis_up_to(4))
    for (int j : a.basis_up_to(4)) {
      Element lhs = u->parse(a.format(a.multiply(i, j)));
      Element rhs = u->multiply(u->parse(a.format(i)), u->parse(a.format(j)));
      EXPECT_EQ(lhs, rhs) << a.format(i) << " * " << a.format(j);
    }
}

TEST_F(UgFixture, CorruptedGeneratorValueBreaksTheHexagon) {
  OverrideTwist bad(tau, {{{S.parse_basis("y"), R.parse_basis("x")}, rs(R, S, "x", "y") + rs(R, S, "1", "1")}});
  CheckReport rep = check_twist_axiom(bad, 4);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.witness.empty());
  EXPECT_NE(rep.lhs, rep.rhs);
}

TEST(WeylRule, ExtensionIsAConsistentTwist) {
  // y (x) x -> x (x) y + 1 (x) 1 extends to the Weyl algebra, a genuine twist.
  PolynomialAlgebra R(Q, {"x"}, 6);
  PolynomialAlgebra S(Q, {"y"}, 6);
  auto tau = extend_twist_from_generators(R, S, parse_generator_rules(R, S, {{{"y", "x", "x*y + 1"}}}), 6);
  EXPECT_TRUE(check_twist_inverse(*tau, 6).pass);
}

TEST(Bicharacter, QuantumPlane) {
  Field f5 = Field::prime(5);
  PolynomialAlgebra R(f5, {"x"}, 6);
  PolynomialAlgebra S(f5, {"y"}, 6);
  GeneratorTwist tau(R, S, parse_generator_rules(R, S, {{{"y", "x", "2*x*y"}}}));
  EXPECT_TRUE(tau.strongly_graded());
  // y^2 (x) x^3 -> 2^6 x^3 (x) y^2 = 4 x^3 (x) y^2 over F5.
  EXPECT_EQ(tau.apply(S.parse_basis("y^2"), R.parse_basis("x^3")),
            Tensor(Word{R.parse_basis("x^3"), S.parse_basis("y^2")}, Scalar(f5, 4L)));
  EXPECT_TRUE(check_twist_axiom(tau, 4).pass);
  EXPECT_TRUE(check_twist_inverse(tau, 6).pass);
}

struct GroupFixture : ::testing::Test {
  FiniteGroup c2{{{"g", {1, 0}}}};
  std::unique_ptr<StructureConstantAlgebra> kg = c2.algebra(Q, "kC2");
  GroupHopfAlgebra hopf{c2, *kg};
  PolynomialAlgebra R{Q, {"x"}, 6};
  GroupAction action{hopf, R, {{R.parse("-x")}}};
  HopfSmashTwist tau{action};
};

TEST_F(GroupFixture, SmashTwistOnGenerators) {
  int g = kg->parse_basis("g");
  EXPECT_EQ(tau.apply(g, R.parse_basis("x")), rs(R, *kg, "x", "g", -1));
  EXPECT_EQ(tau.apply(g, R.parse_basis("x^2")), rs(R, *kg, "x^2", "g"));
  EXPECT_EQ(tau.apply(Algebra::unit(), R.parse_basis("x^3")), rs(R, *kg, "x^3", "1"));
  EXPECT_TRUE(tau.strongly_graded());
}

TEST_F(GroupFixture, AxiomsAndClosedInverse) {
  EXPECT_TRUE(check_hopf_axioms(hopf).pass);
  EXPECT_TRUE(check_action_axioms(action, 4).pass);
  EXPECT_TRUE(check_twist_axiom(tau, 3).pass);
  CheckReport inv = check_twist_inverse(tau, 6);
  EXPECT_TRUE(inv.pass) << inv.witness << " " << inv.lhs << " vs " << inv.rhs;
}

TEST(GroupAction, SymmetricGroupPermutingVariables) {
  FiniteGroup s3({{"s", {1, 0, 2}}, {"t", {0, 2, 1}}});
  auto kg = s3.algebra(Field::prime(3), "kS3");
  GroupHopfAlgebra hopf(s3, *kg);
  PolynomialAlgebra R(Field::prime(3), {"x", "y", "z"}, 4);
  GroupAction action(hopf, R, {{R.parse("y"), R.parse("x"), R.parse("z")}, {R.parse("x"), R.parse("z"), R.parse("y")}});
  EXPECT_TRUE(check_hopf_axioms(hopf).pass);
  CheckReport rep = check_action_axioms(action, 3);
  EXPECT_TRUE(rep.pass) << rep.witness;
  HopfSmashTwist tau(action);
  EXPECT_TRUE(check_twist_axiom(tau, 2).pass);
  EXPECT_TRUE(check_twist_inverse(tau, 4).pass);
  // Generic extension from group generators agrees with the smash twist.
  std::map<std::pair<int, int>, Tensor> rules;
  for (int g : kg->generators())
    for (int x : R.generators()) rules[{g, x}] = tau.apply(g, x);
  GeneratorTwist ext(R, *kg, rules);
  for (int g = 0; g < kg->size(); ++g)
    for (int r : R.basis_up_to(3)) EXPECT_EQ(ext.apply(g, r), tau.apply(g, r));
}

TEST(GroupAction, InconsistentImagesAreRejected) {
  // g of order two sending x to 2x is not an action of C2.
  FiniteGroup c2({{"g", {1, 0}}});
  auto kg = c2.algebra(Q, "kC2");
  GroupHopfAlgebra hopf(c2, *kg);
  PolynomialAlgebra R(Q, {"x"}, 3);
  GroupAction action(hopf, R, {{R.parse("2*x")}});
  EXPECT_FALSE(check_action_axioms(action, 2).pass);
}

TEST(IteratedTwist, GroupCaseActsDiagonally) {
  FiniteGroup c2({{"g", {1, 0}}});
  auto kg = c2.algebra(Q, "kC2");
  GroupHopfAlgebra hopf(c2, *kg);
  PolynomialAlgebra R(Q, {"x", "y"}, 6);
  GroupAction action(hopf, R, {{R.parse("y"), R.parse("x")}});
  HopfSmashTwist tau(action);
  int g = kg->parse_basis("g");
  Word w{R.parse_basis("x"), R.parse_basis("x*y^2"), R.parse_basis("y")};
  Tensor expected(Q, Word{R.parse_basis("y"), R.parse_basis("x^2*y"), R.parse_basis("x"), g});
  EXPECT_EQ(twist_through_R(tau, g, w, false), expected);
  Word w0{R.parse_basis("x"), R.parse_basis("y")};
  EXPECT_EQ(twist_through_R(tau, Algebra::unit(), w0, false),
            Tensor(Q, Word{w0[0], w0[1], Algebra::unit()}));
  // Through an S-word: ^{g g}r = r for the bar word (g, g).
  Word sw{g, g, Algebra::unit()};
  EXPECT_EQ(twist_through_S(tau, sw, R.parse_basis("x"), true),
            Tensor(Q, Word{R.parse_basis("x"), g, g, Algebra::unit()}));
}

TEST_F(UgFixture, ReducedIteratedTwistDropsUnitInnerSlots) {
  int x = R.parse_basis("x");
  int y = S.parse_basis("y");
  Word sw{Algebra::unit(), y, Algebra::unit()};
  // x passes 1, then y: y (x) x -> x (x) y + x (x) 1; the second term has a unit inner slot.
  Tensor full = twist_through_S(tau, sw, x, false);
  Tensor red = twist_through_S(tau, sw, x, true);
  EXPECT_EQ(full.size(), 2u);
  EXPECT_EQ(red, Tensor(Q, Word{x, Algebra::unit(), y, Algebra::unit()}));
}

// Iterated twists commute with multiplication of adjacent slots.
TEST_F(UgFixture, IteratedTwistCommutesWithMultiplication) {
  std::vector<int> b = R.basis_up_to(2);
  for (int s : S.basis_up_to(2))
    for (int r0 : b)
      for (int r1 : b)
        for (int r2 : b) {
          Word w{r0, r1, r2};
          // multiply slots 1 and 2 after twisting vs before.
          Tensor before(Q);
          for (const auto& [p, c] : R.multiply(r1, r2))
            before.add(twist_through_R(tau, s, Word{r0, p}, false), c);
          Tensor after(Q);
          for (const auto& [v, c] : twist_through_R(tau, s, w, false))
            for (const auto& [p, cp] : R.multiply(v[1], v[2])) after.add(Word{v[0], p, v[3]}, c * cp);
          EXPECT_EQ(before, after);
        }
}

}  // namespace
}  // namespace awez
