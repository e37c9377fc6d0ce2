#pragma once

#include <optional>
#include <string>
#include <vector>

#include "awez/algebra.hpp"
#include "awez/linear.hpp"

namespace awez {

// A basis word written as left . generator . right with a free generator.
struct FreeTerm {
  int left;
  Word generator;
  int right;
};

// A complex of free A-bimodules P_n -> ... -> P_0 -> A, truncated, whose
// terms are spanned (as vector spaces) by basis words. The slot layout of a
// word is specific to each complex; `n` is always passed alongside.
class Complex {
 public:
  virtual ~Complex() = default;

  virtual std::string name() const = 0;
  // The algebra A this complex resolves.
  virtual const Algebra& algebra() const = 0;
  Field field() const { return algebra().field(); }
  // Products in A respect degrees exactly (otherwise only the filtration),
  // which decides whether degree blocks are exact or cumulative.
  bool graded() const { return algebra().graded(); }

  // Highest homological degree this complex is defined in.
  virtual int max_degree() const = 0;
  virtual std::size_t word_length(int n) const = 0;
  virtual int degree(int n, const Word& w) const = 0;

  // d_n : P_n -> P_{n-1} for n >= 1.
  virtual Tensor differential(int n, const Word& w) const = 0;
  // P_0 -> A.
  virtual Element augmentation(const Word& w) const = 0;
  // a . w . b for basis elements a, b of A.
  virtual Tensor act(int a, const Word& w, int b, int n) const = 0;

  // Vector-space basis of P_n in internal degree exactly d.
  virtual std::vector<Word> basis(int n, int d) const = 0;
  // Free bimodule generators of P_n of internal degree exactly d.
  virtual std::vector<Word> generators(int n, int d) const = 0;
  virtual std::string format(int n, const Word& w) const = 0;
  // Writes a basis word in terms of free generators, when the complex knows how.
  virtual std::optional<std::vector<FreeTerm>> free_decomposition(int, const Word&) const { return std::nullopt; }

  Tensor differential(int n, const Tensor& t) const;
  Element augmentation(const Tensor& t) const;
  Tensor act(const Element& a, const Tensor& t, const Element& b, int n) const;
  std::string format(int n, const Tensor& t) const;
  // Basis words of degree <= d (all degrees up to d, in order).
  std::vector<Word> basis_up_to(int n, int d) const;
};

// tau_C : S (x) C_n -> C_n (x) S for a complex C over R. Output words are C
// words with the S letter appended.
class LeftCompatibility {
 public:
  virtual ~LeftCompatibility() = default;
  virtual Tensor apply(int n, int s, const Word& c) const = 0;
};

// tau_D : D_n (x) R -> R (x) D_n for a complex D over S. Output words are the
// R letter followed by a D word.
class RightCompatibility {
 public:
  virtual ~RightCompatibility() = default;
  virtual Tensor apply(int n, const Word& d, int r) const = 0;
};

// All words of `slots` letters from A with total degree exactly d; letters
// at positions with nonunit[i] set avoid the unit.
std::vector<Word> enumerate_words(const Algebra& a, std::size_t slots, int d, const std::vector<bool>& nonunit);

}  // namespace awez
