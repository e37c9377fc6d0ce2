#include <gtest/gtest.h>

#include <algorithm>

#include "awez/awez.hpp"

namespace awez {
namespace {

const Field Q = Field::rationals();

Word letters(const Algebra& a, const std::vector<std::string>& names) {
  Word w;
  for (const auto& s : names) w.push_back(a.parse_basis(s));
  return w;
}

TEST(Shuffles, TwoOneShufflesInOrder) {
  auto s = enumerate_shuffles(2, 1);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].cycles(), "(1)");
  EXPECT_EQ(s[1].cycles(), "(2 3)");
  EXPECT_EQ(s[2].cycles(), "(1 2 3)");
  EXPECT_EQ(enumerate_shuffles(0, 4).size(), 1u);
  EXPECT_EQ(enumerate_shuffles(0, 4)[0].cycles(), "(1)");
}

TEST(Shuffles, TwoThreeContainsTheDisplayedShuffle) {
  auto s = enumerate_shuffles(2, 3);
  ASSERT_EQ(s.size(), 10u);
  auto it = std::find_if(s.begin(), s.end(), [](const Shuffle& x) { return x.cycles() == "(1 3)(2 5 4)"; });
  ASSERT_NE(it, s.end());
  // (1 3)(2 5 4) is a transposition times a 3-cycle.
  EXPECT_EQ(it->sign, -1);
}

int parity_by_cycles(const std::vector<int>& image) {
  std::vector<bool> seen(image.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j] - 1), ++len) seen[j] = true;
    if (len > 0) transpositions += static_cast<int>(len) - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

TEST(Shuffles, MatchBruteForceFiltering) {
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m) {
      std::vector<int> perm(static_cast<std::size_t>(l + m));
      for (int i = 0; i < l + m; ++i) perm[i] = i + 1;
      std::vector<std::pair<std::vector<int>, int>> brute;
      do {
        if (std::is_sorted(perm.begin(), perm.begin() + l) && std::is_sorted(perm.begin() + l, perm.end()))
          brute.emplace_back(perm, parity_by_cycles(perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      auto s = enumerate_shuffles(l, m);
      ASSERT_EQ(s.size(), brute.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(s[i].image, brute[i].first);
        EXPECT_EQ(s[i].sign, brute[i].second);
      }
    }
}

struct Lie : ::testing::Test {
  PolynomialAlgebra R{Q, {"x"}, 9};
  PolynomialAlgebra S{Q, {"y"}, 9};
  GeneratorTwist tau{R, S, parse_generator_rules(R, S, {{{"y", "x", "x*y + x"}}})};
  TwistedProductAlgebra A{tau, "U(g)"};
  AwEz maps{A, 4};

  Word bar(const std::vector<std::string>& names) { return letters(A, names); }
  Word prod(const std::vector<std::string>& r, const std::vector<std::string>& s) {
    return maps.product_word(static_cast<int>(r.size()) - 2, letters(R, r), letters(S, s));
  }
  Tensor a() { return Tensor(Q, bar({"1", "y^2", "x", "x", "1"})); }
  Tensor b() {
    Tensor t(Q, prod({"1", "x", "x", "1"}, {"1", "y^2", "1"}));
    t.add(prod({"1", "x", "x", "1"}, {"1", "y", "1"}), Scalar(Q, 4L));
    return t;
  }
  Tensor c() {
    Tensor t(Q);
    t.add(bar({"1", "x", "x", "y^2", "1"}), Scalar(Q, 1L));
    t.add(bar({"1", "x", "x", "y", "1"}), Scalar(Q, 4L));
    t.add(bar({"1", "y^2", "x", "x", "1"}), Scalar(Q, 1L));
    t.add(bar({"1", "x", "y^2", "x", "1"}), Scalar(Q, -1L));
    t.add(bar({"1", "x", "y", "x", "1"}), Scalar(Q, -2L));
    return t;
  }
};

TEST_F(Lie, LieAlgebraExampleValues) {
  EXPECT_EQ(maps.aw(3, a()), b()) << maps.product(true).format(3, maps.aw(3, a()));
  EXPECT_EQ(maps.ez(3, b()), c()) << maps.bar_A(true).format(3, maps.ez(3, b()));
  EXPECT_EQ(maps.aw(3, c()), b());
  EXPECT_EQ(maps.aw(3, maps.ez(3, b())), b());
  EXPECT_NE(maps.ez(3, maps.aw(3, a())), a());
}

TEST_F(Lie, UnshuffleAndShuffleAreInverse) {
  const BarComplex& bA = maps.bar_A(false);
  for (const Word& w : bA.basis_up_to(2, 3)) {
    Tensor back(Q);
    for (const auto& [y, c] : maps.unshuffle(2, w)) back.add(maps.shuffle(2, y), c);
    ASSERT_EQ(back, Tensor(Q, w)) << bA.format(2, w);
  }
  const IntermediateComplex& Y = maps.intermediate();
  for (const Word& y : Y.basis_up_to(1, 3)) {
    Tensor back(Q);
    for (const auto& [w, c] : maps.shuffle(1, y)) back.add(maps.unshuffle(1, w), c);
    ASSERT_EQ(back, Tensor(Q, y)) << Y.format(1, y);
  }
}

TEST_F(Lie, UnitSlotsAreReordered) {
  // With every S letter a unit the unshuffle only reorders.
  Word w = bar({"x", "x^2", "1", "x"});
  Tensor expected(Q, Word{R.parse_basis("x"), R.parse_basis("x^2"), 0, R.parse_basis("x"), 0, 0, 0, 0});
  EXPECT_EQ(maps.unshuffle(2, w), expected);
}

TEST_F(Lie, FrontBackSummand) {
  // n = 2: the l = 1 summand of 1 r1 r2 1 (x) 1 s1 s2 1 is -(r1 r2 1) (x) (1 s1 s2).
  int x = R.parse_basis("x"), x2 = R.parse_basis("x^2");
  int y = S.parse_basis("y"), y2 = S.parse_basis("y^2");
  Tensor out = maps.front_back(2, Word{0, x, x2, 0, 0, y, y2, 0});
  EXPECT_EQ(out.coeff(maps.product_word(1, Word{x, x2, 0}, Word{0, y, y2})), -Scalar::one(Q));
  EXPECT_EQ(out.size(), 3u);
}

TEST_F(Lie, MapsAreChainMaps) {
  for (const ChainMap* f : {&maps.rho(), &maps.rho_inverse(), &maps.aw_bar(), &maps.ez_bar(), &maps.aw_map(),
                            &maps.ez_map()}) {
    CheckReport rep = check_chain_map(*f, 3, 2);
    EXPECT_TRUE(rep.pass) << rep.name << ": " << rep.witness << "\n  " << rep.lhs << "\n  " << rep.rhs;
  }
}

TEST_F(Lie, MapsAreBimoduleMaps) {
  for (const ChainMap* f : {&maps.rho(), &maps.aw_bar(), &maps.ez_bar(), &maps.aw_map(), &maps.ez_map()}) {
    CheckReport rep = check_bimodule_map(*f, 2, 2, 1);
    EXPECT_TRUE(rep.pass) << rep.name << ": " << rep.witness << "\n  " << rep.lhs << "\n  " << rep.rhs;
  }
  CheckReport raw = check_bimodule_map(maps.in2(), 1, 2, 1);
  EXPECT_FALSE(raw.pass);
}

TEST_F(Lie, AwAfterEzIsIdentity) {
  CheckReport rep = check_identity_composition(maps.aw_map(), maps.ez_map(), 4, 5);
  EXPECT_TRUE(rep.pass) << rep.witness << ": " << rep.lhs;
  EXPECT_FALSE(check_identity_composition(maps.ez_map(), maps.aw_map(), 3, 4).pass);
}

TEST_F(Lie, LiteralThetaSignBreaksTheIdentityInOddBidegree) {
  AwEz literal(A, 3, ThetaSign::Literal);
  Word z = prod({"1", "x", "1"}, {"1", "y", "1"});
  EXPECT_EQ(literal.aw(2, literal.ez(2, z)), -Tensor(Q, z));
  EXPECT_EQ(maps.aw(2, maps.ez(2, z)), Tensor(Q, z));
  EXPECT_FALSE(check_chain_map(literal.ez_bar(), 3, 2).pass);
}

struct SymmetricGroup : ::testing::Test {
  Field f3 = Field::prime(3);
  FiniteGroup s3{{{"s", {1, 0, 2}}, {"t", {0, 2, 1}}}};
  std::unique_ptr<StructureConstantAlgebra> kg = s3.algebra(f3, "kS3");
  GroupHopfAlgebra hopf{s3, *kg};
  PolynomialAlgebra R{f3, {"x", "y", "z"}, 5};
  GroupAction action{hopf, R, {{R.parse("y"), R.parse("x"), R.parse("z")}, {R.parse("x"), R.parse("z"), R.parse("y")}}};
  HopfSmashTwist tau{action};
  TwistedProductAlgebra A{tau, "k[x,y,z]#S3"};
  AwEz maps{A, 3};

  int act(int g, int f) {
    Element e = action.act(g, f);
    return e.begin()->first;
  }
};

TEST_F(SymmetricGroup, GroupUnshuffleClosedForm) {
  int s = kg->parse_basis("s"), t = kg->parse_basis("t"), st = kg->parse_basis("s.t");
  int x = R.parse_basis("x"), y = R.parse_basis("y"), z = R.parse_basis("z");
  Word gs{s, t, st, 0};
  Word fs{x, y, z, x};
  Word w;
  for (int i = 0; i < 4; ++i) w.push_back(A.id(fs[i], gs[i]));
  // f_1, ^{g_1}f_2, ^{g_1 g_2}f_3, ^{g_1 g_2 g_3}f_4, then g_1, ..., g_4.
  int g12 = s3.multiply(s, t);
  int g123 = s3.multiply(g12, st);
  Word expected{x, act(s, y), act(g12, z), act(g123, x), s, t, st, 0};
  EXPECT_EQ(maps.unshuffle(2, w), Tensor(f3, expected));
  // The shuffle applies inverses of the same products.
  Word y4{x, y, z, x, s, t, st, 0};
  Word back{A.id(x, s), A.id(act(s3.inverse(s), y), t), A.id(act(s3.inverse(g12), z), st),
            A.id(act(s3.inverse(g123), x), 0)};
  EXPECT_EQ(maps.shuffle(2, y4), Tensor(f3, back));
}

TEST_F(SymmetricGroup, ThreeTermShuffleExpansion) {
  int s = kg->parse_basis("s"), t = kg->parse_basis("t");
  int x = R.parse_basis("x");
  Word z = maps.product_word(1, Word{0, x, 0}, Word{0, s, t, 0});
  Tensor expected(f3);
  int fx = A.id(x, 0), gs = A.id(0, s), gt = A.id(0, t);
  expected.add(Word{0, fx, gs, gt, 0}, Scalar::one(f3));
  expected.add(Word{0, gs, A.id(act(s3.inverse(s), x), 0), gt, 0}, -Scalar::one(f3));
  expected.add(Word{0, gs, gt, A.id(act(s3.inverse(s3.multiply(s, t)), x), 0), 0}, Scalar::one(f3));
  EXPECT_EQ(maps.ez_unreduced(3, z), expected);
}

}  // namespace
}  // namespace awez
