#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "awez/scalar.hpp"

namespace awez {

// A basis word: a sequence of basis ids. Its meaning depends on the complex
// that owns it (see the individual complexes for the slot layout).
using Word = std::vector<int>;

// Finite linear combination of basis keys with coefficients in a field.
// Terms are kept sorted by key and zero coefficients are never stored.
template <class Key>
class Linear {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  Linear() = default;
  explicit Linear(Field f) : field_(f) {}
  Linear(Field f, const Key& k) : field_(f) { terms_.emplace(k, Scalar::one(f)); }
  Linear(const Key& k, const Scalar& c) : field_(c.field()) { add(k, c); }

  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const Linear& o, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add(k, v * c);
  }

  Linear& operator+=(const Linear& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  Linear& operator-=(const Linear& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  Linear& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend Linear operator+(Linear a, const Linear& b) { return a += b; }
  friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
  friend Linear operator*(const Scalar& c, Linear a) { return a *= c; }
  Linear operator-() const {
    Linear r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  friend bool operator==(const Linear& a, const Linear& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Linear& a, const Linear& b) { return !(a == b); }

  // Applies a linear map given on basis keys.
  template <class F>
  auto map(F&& f) const -> decltype(f(std::declval<const Key&>())) {
    decltype(f(std::declval<const Key&>())) out(field_);
    for (const auto& [k, v] : terms_) out.add(f(k), v);
    return out;
  }

 private:
  Field field_;
  Map terms_;
};

using Tensor = Linear<Word>;
using Element = Linear<int>;

// Renders a combination of words as "w1 - 2·w2 + ...", one formatter call per word.
std::string format_combination(const Tensor& t, const std::function<std::string(const Word&)>& word);

}  // namespace awez
