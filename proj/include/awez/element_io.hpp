#pragma once

#include <string>

#include "awez/instance.hpp"
#include "awez/resolutions.hpp"

namespace awez {

// How the basis words of one complex are written as slot lists. An element is
//
//   {"complex": "<id>", "degree": n,
//    "terms": [[{"algebra": "A", "word": "y^2", "coeff": "1"}, ...], ...]}
//
// where each term lists its tensor slots left to right and its coefficient is
// the product of the slot coefficients ("num/den" strings over Q, residues
// over F_p). Slot algebras are "A" for bar words, "R" and "S" for product and
// intermediate words, and "K~" (word = echelon index) for Koszul terms.
struct WordCodec {
  enum class Layout { Bar, Product, Intermediate, KoszulProduct };

  std::string id;
  Layout layout;
  const Complex* complex;
  const Algebra* r = nullptr;
  const Algebra* s = nullptr;
  const KoszulComplex* k = nullptr;  // KoszulProduct only

  static WordCodec bar(std::string id, const BarComplex& b);
  static WordCodec product(std::string id, const TwistedProductComplex& x);
  static WordCodec intermediate(std::string id, const IntermediateComplex& y, const TwistedProductAlgebra& a);
  static WordCodec koszul_product(std::string id, const TwistedProductComplex& x, const KoszulComplex& k);
};

Json element_to_json(const WordCodec& codec, int n, const Tensor& t);
// Throws InstanceError positioned at `where` plus a JSON pointer.
Tensor element_from_json(const WordCodec& codec, const Json& j, int& n, const std::string& where);

}  // namespace awez
