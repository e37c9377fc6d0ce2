#include <gtest/gtest.h>

#include "awez/convert.hpp"

namespace awez {
namespace {

// C2 acting on k[x, y] (or k[x]) by negating every variable.
struct NegationAction {
  NegationAction(Field f, std::vector<std::string> vars, int order = 2)
      : group(order == 2 ? std::vector<std::pair<std::string, std::vector<int>>>{{"g", {1, 0}}}
                         : std::vector<std::pair<std::string, std::vector<int>>>{{"e", {0}}}),
        kg(group.algebra(f, order == 2 ? "kC2" : "k1")),
        hopf(group, *kg),
        R(f, vars, 6),
        action(hopf, R, order == 2 ? std::vector<std::vector<Element>>{images(vars)} : std::vector<std::vector<Element>>{}),
        tau(action),
        A(tau, "R#H") {}

  std::vector<Element> images(const std::vector<std::string>& vars) {
    std::vector<Element> out;
    for (const auto& v : vars) out.push_back(R.parse("-" + v));
    return out;
  }

  FiniteGroup group;
  std::unique_ptr<StructureConstantAlgebra> kg;
  GroupHopfAlgebra hopf;
  PolynomialAlgebra R;
  GroupAction action;
  HopfSmashTwist tau;
  TwistedProductAlgebra A;
};

void expect_pipeline(const SmashKoszulPipeline& p) {
  CheckReport compat = check_compatible(p.compatibility(), 3, 3, 1);
  EXPECT_TRUE(compat.pass) << compat.witness << "\n  " << compat.lhs << "\n  " << compat.rhs;
  for (const ChainMap* f : {&p.iota_R(), &p.iota()}) {
    CheckReport rep = check_chain_map(*f, 3, 3);
    EXPECT_TRUE(rep.pass) << rep.name << ": " << rep.witness << "\n  " << rep.lhs << "\n  " << rep.rhs;
  }
  CheckReport pi_iota = check_identity_composition(p.pi(), p.iota(), 3, 3);
  EXPECT_TRUE(pi_iota.pass) << pi_iota.witness << ": " << pi_iota.lhs;
  CheckReport pi_chain = check_chain_map(p.pi(), 3, 2);
  EXPECT_TRUE(pi_chain.pass) << pi_chain.witness << "\n  " << pi_chain.lhs << "\n  " << pi_chain.rhs;
}

TEST(SmashKoszul, NegationOnTwoVariablesOverRationals) {
  NegationAction c2(Field::rationals(), {"x", "y"});
  SmashKoszulPipeline p(c2.A, c2.action, 3);
  expect_pipeline(p);
  CheckReport bimodule = check_bimodule_map(p.pi(), 2, 1, 1);
  EXPECT_TRUE(bimodule.pass) << bimodule.witness << "\n  " << bimodule.lhs << "\n  " << bimodule.rhs;
  // The Koszul side is strictly smaller, so some block has a complement to lift.
  int lifted = 0;
  for (const auto& [key, info] : p.lift().blocks()) lifted += info.complement;
  EXPECT_GT(lifted, 0);
}

TEST(SmashKoszul, NegationOnTwoVariablesOverF3) {
  NegationAction c2(Field::prime(3), {"x", "y"});
  SmashKoszulPipeline p(c2.A, c2.action, 3);
  expect_pipeline(p);
}

TEST(SmashKoszul, CorollaryIdentityForPiRH) {
  NegationAction c2(Field::rationals(), {"x", "y"});
  SmashKoszulPipeline p(c2.A, c2.action, 3);
  ChainMap iota_tensor = tensor_chain_maps(p.iota_R(), p.iota_H(), p.product(), p.maps().product(true));
  CheckReport rep = check_identity_composition(p.pi_RH(), iota_tensor, 3, 3);
  EXPECT_TRUE(rep.pass) << rep.witness << ": " << rep.lhs;
}

TEST(SmashKoszul, IotaPiIsIdempotent) {
  NegationAction c2(Field::rationals(), {"x", "y"});
  SmashKoszulPipeline p(c2.A, c2.action, 3);
  ChainMap e = compose(p.iota(), p.pi());
  const BarComplex& bA = p.maps().bar_A(true);
  for (int n = 0; n <= 2; ++n)
    for (const Word& w : bA.basis_up_to(n, 2)) {
      Tensor once = e.apply(n, w);
      ASSERT_EQ(e.apply(n, once), once) << bA.format(n, w);
    }
}

TEST(SmashKoszul, TrivialGroupReducesToKoszulAgainstBar) {
  NegationAction triv(Field::rationals(), {"x", "y"}, 1);
  SmashKoszulPipeline p(triv.A, triv.action, 3);
  expect_pipeline(p);
  EXPECT_EQ(p.product().generators(2, 2).size(), 1u);
}

TEST(SmashKoszul, SignCorruptedKoszulTwistIsNotCompatible) {
  NegationAction c2(Field::rationals(), {"x", "y"});
  SmashKoszulPipeline p(c2.A, c2.action, 2);
  KoszulHopfTwist bad(c2.action, p.koszul(), 1);
  BarLeftTwist tau_bar_R(c2.tau, true);
  BarRightTwist tau_bar_H(c2.tau, true);
  CheckReport rep = check_compatible(CompatiblePair{p.iota_R(), p.iota_H(), bad, tau_bar_R, tau_bar_H, tau_bar_H}, 2, 2, 1);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.witness.empty());
}

TEST(Bootstrap, IdentityLiftsToIdentity) {
  PolynomialAlgebra R(Field::rationals(), {"x", "y"}, 6);
  BarComplex bar(R, true, 3);
  BootstrapLift lift(identity_map(bar));
  for (int n = 0; n <= 3; ++n)
    for (const Word& w : bar.basis_up_to(n, 2)) ASSERT_EQ(lift.apply(n, w), Tensor(R.field(), w)) << bar.format(n, w);
  for (const auto& [key, info] : lift.blocks()) EXPECT_EQ(info.complement, 0);
}

TEST(Bootstrap, KoszulInclusionLiftsToAChainMap) {
  PolynomialAlgebra R(Field::rationals(), {"x", "y", "z"}, 6);
  BarComplex bar(R, true, 3);
  KoszulComplex k(R, 3);
  BootstrapLift lift(koszul_inclusion(k, bar));
  EXPECT_TRUE(check_identity_composition(lift.map(), lift.psi(), 3, 3).pass);
  CheckReport rep = check_chain_map(lift.map(), 3, 3);
  EXPECT_TRUE(rep.pass) << rep.witness << "\n  " << rep.lhs << "\n  " << rep.rhs;
}

TEST(Bootstrap, NonInjectiveMapIsRejected) {
  PolynomialAlgebra R(Field::rationals(), {"x"}, 6);
  BarComplex bar(R, true, 3);
  ChainMap zero("0", bar, bar, [&R](int, const Word&) { return Tensor(R.field()); });
  BootstrapLift lift(zero);
  Word g{Algebra::unit(), R.parse_basis("x"), Algebra::unit()};
  EXPECT_THROW(lift.apply(1, g), NotLiftable);
}

struct OneVariable : ::testing::Test {
  NegationAction c2{Field::rationals(), {"x"}};
  AwEz maps{c2.A, 3};
  KoszulComplex k{c2.R, 3};
  KoszulHopfTwist tau_k{c2.action, k};
  BarLeftTwist tau_bar_R{c2.tau, true};
  BarRightTwist tau_bar_H{c2.tau, true};
  TwistedProductComplex x{c2.A, k, maps.bar_S(true), tau_k, tau_bar_H, "K ⊗τ B̄_H"};
  ChainMap iota_R = koszul_inclusion(k, maps.bar_R(true));
  ChainMap pi_R = one_variable_koszul_projection(maps.bar_R(true), k);
  ChainMap one = identity_map(maps.bar_S(true));
};

TEST_F(OneVariable, ClosedProjectionIsCompatible) {
  EXPECT_TRUE(check_chain_map(pi_R, 3, 4).pass);
  EXPECT_TRUE(check_identity_composition(pi_R, iota_R, 3, 4).pass);
  CheckReport rep = check_compatible(CompatiblePair{pi_R, one, tau_bar_R, tau_k, tau_bar_H, tau_bar_H}, 3, 4, 1);
  EXPECT_TRUE(rep.pass) << rep.witness << "\n  " << rep.lhs << "\n  " << rep.rhs;
}

TEST_F(OneVariable, DirectConversionInvertsIota) {
  Conversion c = conversion_pi_iota(maps, x, pi_R, iota_R, one, one);
  CheckReport rep = check_identity_composition(c.pi, c.iota, 3, 3);
  EXPECT_TRUE(rep.pass) << rep.witness << ": " << rep.lhs;
  EXPECT_TRUE(check_chain_map(c.pi, 3, 3).pass);
  EXPECT_TRUE(check_chain_map(c.iota, 3, 3).pass);
}

TEST_F(OneVariable, LiftedConversionInvertsIota) {
  LiftedConversion c = conversion_by_lifting(maps, x, iota_R, one);
  CheckReport rep = check_identity_composition(c.pi(), c.iota, 3, 3);
  EXPECT_TRUE(rep.pass) << rep.witness << ": " << rep.lhs;
  EXPECT_TRUE(check_chain_map(c.pi(), 3, 3).pass);
}

TEST_F(OneVariable, IdentityInputsRecoverAwAndEz) {
  ChainMap id_R = identity_map(maps.bar_R(true));
  Conversion c = conversion_pi_iota(maps, maps.product(true), id_R, id_R, one, one);
  const BarComplex& bA = maps.bar_A(true);
  for (const Word& w : bA.basis_up_to(2, 3)) ASSERT_EQ(c.pi.apply(2, w), maps.aw(2, w));
  for (const Word& w : maps.product(true).basis_up_to(2, 3)) ASSERT_EQ(c.iota.apply(2, w), maps.ez(2, w));
}

}  // namespace
}  // namespace awez
