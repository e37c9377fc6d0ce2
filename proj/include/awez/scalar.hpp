#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace awez {

// Coefficient field: the rationals (characteristic 0) or F_p for an odd prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  // Accepts "Q", "QQ", "F5", "GF(5)".
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

// An element of a Field. Values from different fields never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  // "3", "-2/5"; for F_p the denominator is inverted mod p.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  // Canonical text: "num/den" (or "num") over Q, residue in [0, p) over F_p.
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::int64_t r_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace awez
