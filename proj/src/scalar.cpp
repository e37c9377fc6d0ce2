#include "awez/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace awez {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t reduce(long v, std::uint32_t p) {
  std::int64_t m = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p);
  return m < 0 ? m + p : m;
}

std::int64_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class m = v % p;
  if (m < 0) m += p;
  return m.get_si();
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime(p) || p > 2147483647u)
    throw std::invalid_argument("F_p requires an odd prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
  std::string_view digits;
  if (text.size() > 1 && text[0] == 'F') {
    digits = text.substr(1);
  } else if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw std::invalid_argument("unknown field '" + std::string(text) + "'");
  }
  std::uint64_t p = 0;
  for (char c : digits) {
    if (c < '0' || c > '9' || p > 4294967295ull / 10)
      throw std::invalid_argument("unknown field '" + std::string(text) + "'");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return prime(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rational())
    q_ = v;
  else
    r_ = reduce(v, f.characteristic());
}

Scalar::Scalar(Field f, const mpq_class& v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
    q_.canonicalize();
    return;
  }
  std::uint32_t p = f.characteristic();
  std::int64_t den = reduce(v.get_den(), p);
  if (den == 0) throw std::domain_error("denominator divisible by " + std::to_string(p));
  r_ = reduce(v.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  mpq_class v;
  std::string s(text);
  if (s.empty() || v.set_str(s, 10) != 0)
    throw std::invalid_argument("bad coefficient '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  v.canonicalize();
  return Scalar(f, v);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

std::string Scalar::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw std::logic_error("mixing scalars of " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = -q_;
  else if (r_ != 0)
    r.r_ = field_.characteristic() - r_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    r_ -= o.r_;
    if (r_ < 0) r_ += field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.characteristic();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace awez
