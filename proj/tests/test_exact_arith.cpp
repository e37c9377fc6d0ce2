#include <random>

#include <gtest/gtest.h>

#include "awez/linalg.hpp"

namespace awez {
namespace {

SparseVector vec(Field f, std::initializer_list<long> entries) {
  SparseVector v(f);
  int i = 0;
  for (long e : entries) v.add(i++, Scalar(f, e));
  return v;
}

// Column j of the matrix given row by row.
std::vector<SparseVector> columns(Field f, const std::vector<std::vector<long>>& rows) {
  std::vector<SparseVector> cols(rows.front().size(), SparseVector(f));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) cols[j].add(static_cast<int>(i), Scalar(f, rows[i][j]));
  return cols;
}

SparseVector times(Field f, const std::vector<SparseVector>& cols, const SparseVector& x) {
  SparseVector out(f);
  for (const auto& [j, c] : x) out.add(cols[j], c);
  return out;
}

TEST(Field, RejectsCharacteristicTwo) {
  EXPECT_THROW(Field::prime(2), std::invalid_argument);
  EXPECT_THROW(Field::parse("F2"), std::invalid_argument);
  EXPECT_THROW(Field::prime(9), std::invalid_argument);
  EXPECT_EQ(Field::parse("F5").characteristic(), 5u);
  EXPECT_TRUE(Field::parse("Q").is_rational());
}

TEST(Scalar, RationalArithmeticIsExact) {
  Field q = Field::rationals();
  Scalar a = Scalar::parse(q, "1/3");
  Scalar b = Scalar::parse(q, "-2/6");
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ((a * Scalar(q, 3L)).str(), "1");
  EXPECT_EQ((Scalar(q, 1L) / Scalar(q, 7L)).str(), "1/7");
  EXPECT_EQ(b.str(), "-1/3");
}

TEST(Scalar, PrimeFieldResiduesStayReduced) {
  Field f = Field::prime(5);
  Scalar a(f, -1L);
  EXPECT_EQ(a.str(), "4");
  EXPECT_EQ((a * a).str(), "1");
  EXPECT_EQ(Scalar::parse(f, "1/2").str(), "3");
  EXPECT_THROW(Scalar::parse(f, "1/5"), std::domain_error);
  EXPECT_THROW(Scalar(f, 0L).inverse(), std::domain_error);
}

TEST(Scalar, FieldsDoNotMix) {
  EXPECT_THROW(Scalar(Field::prime(3), 1L) + Scalar(Field::rationals(), 1L), std::logic_error);
}

TEST(Solve, IdentityReturnsRightHandSide) {
  Field q = Field::rationals();
  auto a = columns(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  SparseVector e2(q);
  e2.add(1, Scalar::one(q));
  auto x = solve(q, a, e2);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, e2);
}

TEST(Solve, TwoByTwo) {
  Field q = Field::rationals();
  auto x = solve(q, columns(q, {{1, 2}, {3, 4}}), vec(q, {5, 11}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vec(q, {1, 2}));
}

TEST(Solve, InconsistentSystemHasNoSolution) {
  Field q = Field::rationals();
  EXPECT_FALSE(solve(q, columns(q, {{1, 1}, {1, 1}}), vec(q, {0, 1})));
}

TEST(Rank, SmallCases) {
  Field q = Field::rationals();
  EXPECT_EQ(rank(q, columns(q, {{0, 0}, {0, 0}})), 0u);
  EXPECT_EQ(rank(q, columns(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
  EXPECT_EQ(rank(q, columns(q, {{1, 2}, {2, 4}})), 1u);
}

// Relation space of the polynomial ring on m variables inside V (x) V.
std::vector<SparseVector> commutators(Field f, int m) {
  std::vector<SparseVector> rel;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      SparseVector v(f);
      v.add(i * m + j, Scalar::one(f));
      v.add(j * m + i, -Scalar::one(f));
      rel.push_back(v);
    }
  return rel;
}

// U (x) V^{(x) k} and V^{(x) k} (x) U inside V^{(x) (2 + k)}.
std::vector<SparseVector> pad(Field f, const std::vector<SparseVector>& u, int m, int k, bool left) {
  int block = 1;
  for (int i = 0; i < k; ++i) block *= m;
  std::vector<SparseVector> out;
  for (const auto& v : u)
    for (int b = 0; b < block; ++b) {
      SparseVector w(f);
      for (const auto& [idx, c] : v) w.add(left ? idx * block + b : b * m * m + idx, c);
      out.push_back(w);
    }
  return out;
}

TEST(Intersection, SingleSubspaceIsItsEchelonBasis) {
  Field q = Field::rationals();
  std::vector<SparseVector> u{vec(q, {2, 4, 0}), vec(q, {1, 2, 1})};
  auto r = subspace_intersection(q, {u});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], vec(q, {1, 2, 0}));
  EXPECT_EQ(r[1], vec(q, {0, 0, 1}));
  EXPECT_THROW(subspace_intersection(q, {}), std::invalid_argument);
}

TEST(Intersection, KoszulCubesInTwoAndThreeVariables) {
  Field q = Field::rationals();
  auto r2 = commutators(q, 2);
  EXPECT_TRUE(subspace_intersection(q, {pad(q, r2, 2, 1, true), pad(q, r2, 2, 1, false)}).empty());
  auto r3 = commutators(q, 3);
  auto k3 = subspace_intersection(q, {pad(q, r3, 3, 1, true), pad(q, r3, 3, 1, false)});
  ASSERT_EQ(k3.size(), 1u);
  // The alternating cube: coefficient sign(sigma) at x_sigma(0) x_sigma(1) x_sigma(2).
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const long sign[6] = {1, -1, -1, 1, 1, -1};
  SparseVector alt(q);
  for (int p = 0; p < 6; ++p) alt.add(perms[p][0] * 9 + perms[p][1] * 3 + perms[p][2], Scalar(q, sign[p]));
  EXPECT_EQ(k3[0], alt);
}

class RandomLinearAlgebra : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RandomLinearAlgebra, SolveRankKernelAgree) {
  std::uint32_t p = GetParam();
  Field f = p == 0 ? Field::rationals() : Field::prime(p);
  std::mt19937_64 rng(20241015 + p);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    std::vector<SparseVector> a(cols, SparseVector(f));
    for (auto& c : a)
      for (int i = 0; i < rows; ++i)
        if (rng() % 2) c.add(i, Scalar(f, coef(rng)));
    auto ker = kernel(f, a);
    EXPECT_EQ(rank(f, a) + ker.size(), static_cast<std::size_t>(cols));
    for (const auto& k : ker) EXPECT_TRUE(times(f, a, k).is_zero());
    SparseVector x0(f);
    for (int j = 0; j < cols; ++j) x0.add(j, Scalar(f, coef(rng)));
    SparseVector b = times(f, a, x0);
    auto x = solve(f, a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(times(f, a, *x), b);
  }
}

TEST_P(RandomLinearAlgebra, IntersectionIsContainedAndMaximal) {
  std::uint32_t p = GetParam();
  Field f = p == 0 ? Field::rationals() : Field::prime(p);
  std::mt19937_64 rng(77 + p);
  std::uniform_int_distribution<long> coef(-2, 2);
  const int dim = 5;
  auto random_space = [&](int k) {
    std::vector<SparseVector> s;
    for (int i = 0; i < k; ++i) {
      SparseVector v(f);
      for (int j = 0; j < dim; ++j) v.add(j, Scalar(f, coef(rng)));
      s.push_back(v);
    }
    return s;
  };
  for (int trial = 0; trial < 30; ++trial) {
    auto common = random_space(1 + static_cast<int>(rng() % 2));
    auto u = random_space(static_cast<int>(rng() % 3));
    auto w = random_space(static_cast<int>(rng() % 3));
    u.insert(u.end(), common.begin(), common.end());
    w.insert(w.end(), common.begin(), common.end());
    auto cap = subspace_intersection(f, {u, w});
    Echelon eu(f), ew(f), ec(f);
    for (const auto& v : u) eu.insert(v);
    for (const auto& v : w) ew.insert(v);
    for (const auto& v : cap) {
      EXPECT_TRUE(eu.contains(v));
      EXPECT_TRUE(ew.contains(v));
      ec.insert(v);
    }
    for (const auto& v : common) EXPECT_TRUE(ec.contains(v));
    // dim(U + W) + dim(U cap W) = dim U + dim W.
    std::vector<SparseVector> sum = u;
    sum.insert(sum.end(), w.begin(), w.end());
    EXPECT_EQ(rank(f, sum) + cap.size(), eu.rank() + ew.rank());
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RandomLinearAlgebra, ::testing::Values(0u, 3u, 5u));

}  // namespace
}  // namespace awez
