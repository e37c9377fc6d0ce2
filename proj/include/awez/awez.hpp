#pragma once

#include <string>
#include <vector>

#include "awez/chain_map.hpp"
#include "awez/resolutions.hpp"

namespace awez {

// An (l, m)-shuffle: a permutation of {1, ..., l + m} increasing on the first
// l and on the last m positions. image[i - 1] = sigma(i).
struct Shuffle {
  std::vector<int> image;
  int sign = 1;
  // Cycle notation, "(1)" for the identity.
  std::string cycles() const;
};

// All binomial(l + m, l) shuffles, ordered lexicographically by image.
std::vector<Shuffle> enumerate_shuffles(int l, int m);

// Sign convention for the shuffle map theta. Literal multiplies each bidegree
// summand by (-1)^{l(n-l)} in addition to sgn(sigma), as phi does; Corrected
// omits that factor in theta.
enum class ThetaSign { Corrected, Literal };

// The complexes and maps around a twisted tensor product A = R (x)_tau S:
//
//   B_A  --rho-->  Y  --phi-->  B_R (x)_tau B_S        AW_B = phi rho
//   B_A  <-rho^-1- Y  <-theta-  B_R (x)_tau B_S        EZ_B = rho^-1 theta
//
// and their reduced versions AW = pr phi rho, EZ = pr rho^-1 theta between
// B-bar_A and B-bar_R (x)_tau B-bar_S.
class AwEz {
 public:
  AwEz(const TwistedProductAlgebra& a, int max_degree, ThetaSign sign = ThetaSign::Corrected);
  AwEz(const AwEz&) = delete;
  AwEz& operator=(const AwEz&) = delete;

  const TwistedProductAlgebra& algebra() const { return a_; }
  ThetaSign theta_sign() const { return sign_; }
  int max_degree() const { return max_degree_; }

  const BarComplex& bar_A(bool reduced) const { return reduced ? bAbar_ : bA_; }
  const BarComplex& bar_R(bool reduced) const { return reduced ? bRbar_ : bR_; }
  const BarComplex& bar_S(bool reduced) const { return reduced ? bSbar_ : bS_; }
  const TwistedProductComplex& product(bool reduced) const { return reduced ? Xbar_ : X_; }
  const IntermediateComplex& intermediate() const { return Y_; }

  // Word-level oracles. B_A words are A letters; Y words are R letters then
  // S letters; product words are {i, B_R word, B_S word}.
  Tensor unshuffle(int n, const Word& w) const;
  Tensor shuffle(int n, const Word& y) const;
  Tensor front_back(int n, const Word& y) const;
  Tensor shuffle_map(int n, const Word& x) const;
  Tensor aw_unreduced(int n, const Word& w) const;
  Tensor ez_unreduced(int n, const Word& x) const;
  Tensor aw(int n, const Word& w) const;
  Tensor ez(int n, const Word& x) const;

  Tensor aw(int n, const Tensor& t) const;
  Tensor ez(int n, const Tensor& t) const;

  const ChainMap& rho() const { return rho_; }
  const ChainMap& rho_inverse() const { return rho_inv_; }
  const ChainMap& aw_bar() const { return aw_b_; }
  const ChainMap& ez_bar() const { return ez_b_; }
  const ChainMap& aw_map() const { return aw_; }
  const ChainMap& ez_map() const { return ez_; }
  // The raw inclusion in_2 of B-bar_R (x)_tau B-bar_S into B_R (x)_tau B_S.
  const ChainMap& in2() const { return in2_; }

  Word product_word(int i, const Word& r, const Word& s) const { return X_.join(i, r, s); }

 private:
  const TwistedProductAlgebra& a_;
  int max_degree_;
  ThetaSign sign_;
  BarComplex bA_, bAbar_, bR_, bRbar_, bS_, bSbar_;
  BarLeftTwist tl_, tlbar_;
  BarRightTwist tr_, trbar_;
  TwistedProductComplex X_, Xbar_;
  IntermediateComplex Y_;
  ChainMap rho_, rho_inv_, aw_b_, ez_b_, aw_, ez_, in2_;
};

}  // namespace awez
