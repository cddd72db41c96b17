#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "netlog/errors.hpp"

namespace netlog {

class Rational;

// Context object for the field of rationals. Carries no data; it exists so
// that generic code can build constants the same way for every field.
struct RationalField {
  bool operator==(const RationalField&) const { return true; }
  Rational from_rational(const mpq_class& q) const;
  std::string generator() const { return {}; }
  std::string describe() const { return "QQ"; }
};

class Rational {
 public:
  using Context = RationalField;

  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

  std::string to_string() const { return v_.get_str(10); }

  // True if the printed form is a single signed atom (no inner + or -).
  bool is_atomic() const { return true; }

  // Embedding of a rational number; the context is unused.
  static Rational from_rational(const RationalField&, const mpq_class& q) { return Rational(q); }
  std::vector<mpq_class> rational_coordinates() const { return {v_}; }

 private:
  mpq_class v_{0};
};

inline Rational RationalField::from_rational(const mpq_class& q) const { return Rational(q); }

inline Rational field_invert(const Rational& a) { return a.inverse(); }

}  // namespace netlog
