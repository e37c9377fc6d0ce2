#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "awez/complex.hpp"
#include "awez/report.hpp"
#include "awez/twist.hpp"

namespace awez {

// Bar resolution B_A (reduced: B-bar_A). Words are a_0, ..., a_{n+1}; in the
// reduced complex the inner letters a_1, ..., a_n are non-unit basis words.
class BarComplex : public Complex {
 public:
  BarComplex(const Algebra& a, bool reduced, int max_degree, std::string name = "");

  std::string name() const override { return name_; }
  const Algebra& algebra() const override { return a_; }
  bool reduced() const { return reduced_; }
  int max_degree() const override { return max_degree_; }
  std::size_t word_length(int n) const override { return static_cast<std::size_t>(n + 2); }
  int degree(int n, const Word& w) const override;
  Tensor differential(int n, const Word& w) const override;
  Element augmentation(const Word& w) const override;
  Tensor act(int a, const Word& w, int b, int n) const override;
  using Complex::act;
  using Complex::augmentation;
  using Complex::differential;
  std::vector<Word> basis(int n, int d) const override;
  std::vector<Word> generators(int n, int d) const override;
  std::string format(int n, const Word& w) const override;
  using Complex::format;
  std::optional<std::vector<FreeTerm>> free_decomposition(int n, const Word& w) const override;

  // Drops words with a unit inner letter (the projection B -> B-bar).
  Tensor project(const Tensor& t) const;

 private:
  const Algebra& a_;
  bool reduced_;
  int max_degree_;
  std::string name_;
};

// Koszul resolution of a quadratic algebra R = T(V)/(Rel):
// K_n = R (x) K~_n (x) R with K~_n the intersection of V^j (x) Rel (x) V^{n-2-j}.
// Words are {r, k, r'} with k indexing the echelon basis of K~_n.
class KoszulComplex : public Complex {
 public:
  KoszulComplex(const Algebra& r, int max_degree, std::string name = "");

  std::string name() const override { return name_; }
  const Algebra& algebra() const override { return r_; }
  int max_degree() const override { return max_degree_; }
  std::size_t word_length(int) const override { return 3; }
  int degree(int n, const Word& w) const override;
  Tensor differential(int n, const Word& w) const override;
  Element augmentation(const Word& w) const override;
  Tensor act(int a, const Word& w, int b, int n) const override;
  using Complex::act;
  using Complex::augmentation;
  using Complex::differential;
  std::vector<Word> basis(int n, int d) const override;
  std::vector<Word> generators(int n, int d) const override;
  std::string format(int n, const Word& w) const override;
  using Complex::format;
  std::optional<std::vector<FreeTerm>> free_decomposition(int n, const Word& w) const override;

  int generator_count() const { return m_; }
  // Echelon basis of K~_n inside V^{(x) n}; index t of V^{(x) n} stands for
  // v_{t_1} (x) ... (x) v_{t_n} written in base m, most significant first.
  const std::vector<SparseVector>& ktilde(int n) const { return ktilde_.at(static_cast<std::size_t>(n)); }
  int ktilde_dim(int n) const { return static_cast<int>(ktilde(n).size()); }
  // Coordinates of v in the echelon basis of K~_n, if v lies in K~_n.
  std::optional<SparseVector> coordinates(int n, const SparseVector& v) const;
  // Index of an algebra generator (degree-one basis word) in V, or -1.
  int letter(int generator_id) const;
  std::string format_ktilde(int n, const SparseVector& v) const;

  // The canonical inclusion K -> B-bar_R.
  Tensor include_in_bar(int n, const Word& w) const;

 private:
  struct Split {
    int letter;
    SparseVector rest;  // coordinates in K~_{n-1}
  };
  const Algebra& r_;
  int max_degree_;
  std::string name_;
  int m_;
  std::vector<std::vector<SparseVector>> ktilde_;
  std::vector<std::vector<std::vector<Split>>> left_;   // [n][k]
  std::vector<std::vector<std::vector<Split>>> right_;  // [n][k]
};

// Intermediate complex Y: Y_n = R^{(x)(n+2)} (x) S^{(x)(n+2)} with words
// {r_0, ..., r_{n+1}, s_0, ..., s_{n+1}} and the A-bimodule structure that
// moves outer letters through with the iterated twists.
class IntermediateComplex : public Complex {
 public:
  IntermediateComplex(const TwistedProductAlgebra& a, int max_degree);

  std::string name() const override { return "Y"; }
  const Algebra& algebra() const override { return a_; }
  int max_degree() const override { return max_degree_; }
  std::size_t word_length(int n) const override { return static_cast<std::size_t>(2 * n + 4); }
  int degree(int n, const Word& w) const override;
  Tensor differential(int n, const Word& w) const override;
  Element augmentation(const Word& w) const override;
  Tensor act(int a, const Word& w, int b, int n) const override;
  using Complex::act;
  using Complex::augmentation;
  using Complex::differential;
  std::vector<Word> basis(int n, int d) const override;
  // Y is not presented with a free basis; the bar word free generators are
  // used through the unshuffle instead.
  std::vector<Word> generators(int n, int d) const override;
  std::string format(int n, const Word& w) const override;
  using Complex::format;

 private:
  const TwistedProductAlgebra& a_;
  int max_degree_;
};

// Twisted tensor product complex X = C (x)_tau D with X_n the sum of
// C_i (x) D_{n-i}. Words are {i, C word..., D word...}; the differential is
// d_C (x) 1 + (-1)^i 1 (x) d_D.
class TwistedProductComplex : public Complex {
 public:
  TwistedProductComplex(const TwistedProductAlgebra& a, const Complex& c, const Complex& d,
                        const LeftCompatibility& tau_c, const RightCompatibility& tau_d, std::string name);

  std::string name() const override { return name_; }
  const Algebra& algebra() const override { return a_; }
  const Complex& left() const { return c_; }
  const Complex& right() const { return d_; }
  int max_degree() const override;
  std::size_t word_length(int n) const override;
  int degree(int n, const Word& w) const override;
  Tensor differential(int n, const Word& w) const override;
  Element augmentation(const Word& w) const override;
  Tensor act(int a, const Word& w, int b, int n) const override;
  using Complex::act;
  using Complex::augmentation;
  using Complex::differential;
  std::vector<Word> basis(int n, int d) const override;
  std::vector<Word> generators(int n, int d) const override;
  std::string format(int n, const Word& w) const override;
  using Complex::format;

  // {i, c..., d...} from components and back.
  Word join(int i, const Word& c, const Word& d) const;
  void split(int n, const Word& w, int& i, Word& c, Word& d) const;

 private:
  const TwistedProductAlgebra& a_;
  const Complex& c_;
  const Complex& d_;
  const LeftCompatibility& tau_c_;
  const RightCompatibility& tau_d_;
  std::string name_;
};

// Iterated twists tau_{B_R} / tau_{B-bar_R} as compatibility oracles.
class BarLeftTwist : public LeftCompatibility {
 public:
  BarLeftTwist(const TwistingMap& tau, bool reduced) : tau_(tau), reduced_(reduced) {}
  Tensor apply(int, int s, const Word& c) const override { return twist_through_R(tau_, s, c, reduced_); }

 private:
  const TwistingMap& tau_;
  bool reduced_;
};

class BarRightTwist : public RightCompatibility {
 public:
  BarRightTwist(const TwistingMap& tau, bool reduced) : tau_(tau), reduced_(reduced) {}
  Tensor apply(int, const Word& d, int r) const override { return twist_through_S(tau_, d, r, reduced_); }

 private:
  const TwistingMap& tau_;
  bool reduced_;
};

// Words {h_1, ..., h_parts} of the iterated coproduct.
Tensor iterated_coproduct(const HopfAlgebra& h, int x, int parts);

// Left comodule structure of the (reduced) bar resolution of H:
// rho(h^0 (x) ... (x) h^{n+1}) = sum h^0_1 ... h^{n+1}_1 (x) (h^0_2 (x) ... (x) h^{n+1}_2).
// Output words {h, h^0, ..., h^{n+1}}.
Tensor bar_coaction(const HopfAlgebra& h, const Word& w, bool reduced);

// tau_K : H (x) K -> K (x) H, h (x) c -> sum ^{h_1}c (x) h_2, for a Hopf action
// preserving the relation space.
class KoszulHopfTwist : public LeftCompatibility {
 public:
  // negate_in_degree >= 0 flips every sign in that degree (negative control).
  KoszulHopfTwist(const HopfAction& action, const KoszulComplex& k, int negate_in_degree = -1);
  Tensor apply(int n, int h, const Word& c) const override;
  // ^h (r (x) w (x) r') with the diagonal action.
  Tensor act_hopf(int h, int n, const Word& c) const;

 private:
  const HopfAction& action_;
  const KoszulComplex& k_;
  int negate_;
};

// Throws ActionNotAdmissible unless ^h Rel is contained in Rel for all h.
void check_koszul_admissible(const HopfAction& action, const KoszulComplex& k);

// Flips the sign of one term of d_n (negative control for the checks).
class CorruptedDifferential : public Complex {
 public:
  CorruptedDifferential(const Complex& base, int n) : base_(base), n_(n) {}
  std::string name() const override { return base_.name() + " (sign-corrupted d_" + std::to_string(n_) + ")"; }
  const Algebra& algebra() const override { return base_.algebra(); }
  int max_degree() const override { return base_.max_degree(); }
  std::size_t word_length(int n) const override { return base_.word_length(n); }
  int degree(int n, const Word& w) const override { return base_.degree(n, w); }
  Tensor differential(int n, const Word& w) const override;
  Element augmentation(const Word& w) const override { return base_.augmentation(w); }
  Tensor act(int a, const Word& w, int b, int n) const override { return base_.act(a, w, b, n); }
  std::vector<Word> basis(int n, int d) const override { return base_.basis(n, d); }
  std::vector<Word> generators(int n, int d) const override { return base_.generators(n, d); }
  std::string format(int n, const Word& w) const override { return base_.format(n, w); }
  using Complex::differential;
  using Complex::format;

 private:
  const Complex& base_;
  int n_;
};

// d_{n-1} d_n = 0 for 2 <= n <= n_max and epsilon d_1 = 0, on every basis
// word of internal degree <= d_max.
CheckReport check_d_squared(const Complex& p, int n_max, int d_max);

// Exactness of P_{n_max} -> ... -> P_0 -> A -> 0 at P_0, ..., P_{n_max} and at A,
// by ranks on degree blocks (degree-exact when graded, cumulative otherwise).
// The detail field lists the homology dimensions found.
CheckReport check_truncated_exactness(const Complex& p, int n_max, int d_max);

}  // namespace awez
