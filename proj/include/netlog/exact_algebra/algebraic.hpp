#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/exact_algebra/univariate.hpp"

namespace netlog {

class AlgebraicNumber;

// QQ[a]/(m(a)) for a monic irreducible m. Irreducibility is asserted by the
// caller and checked by squarefreeness plus the absence of linear factors,
// which certifies it for deg m <= 3.
class ExtensionField {
 public:
  static constexpr int kCertifiedDegree = 3;

  ExtensionField(UPoly minpoly, std::string generator)
      : m_(std::move(minpoly)), gen_(std::move(generator)) {
    if (m_.degree() < 1) throw InputError("minimal polynomial must be non-constant");
    if (m_.lead() != 1) throw InputError("minimal polynomial must be monic");
    UPoly g = UPoly::gcd(m_, m_.derivative());
    if (g.degree() > 0)
      throw InputError("minimal polynomial is not squarefree; repeated factor " + g.to_string(gen_));
    auto roots = m_.rational_roots();
    if (m_.degree() > 1 && !roots.empty())
      throw InputError("minimal polynomial is reducible; factor " + gen_ + "-(" +
                       roots.front().get_str() + ")");
    build_table();
  }

  int degree() const { return m_.degree(); }
  const UPoly& minpoly() const { return m_; }
  const std::string& generator() const { return gen_; }
  std::string describe() const { return "QQ[" + gen_ + "]/(" + m_.to_string(gen_) + ")"; }

  // Reduce a coefficient vector of length up to 2*deg-1 modulo m.
  std::vector<mpq_class> reduce(const std::vector<mpq_class>& v) const {
    int d = degree();
    std::vector<mpq_class> r(d);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      if (static_cast<int>(k) < d) {
        r[k] += v[k];
      } else {
        const auto& row = table_.at(k - d);
        for (int i = 0; i < d; ++i) r[i] += v[k] * row[i];
      }
    }
    return r;
  }

  bool operator==(const ExtensionField& o) const { return gen_ == o.gen_ && m_ == o.m_; }

 private:
  void build_table() {
    int d = degree();
    std::vector<mpq_class> cur(d);
    // a^d = -(m_0 + ... + m_{d-1} a^{d-1})
    for (int i = 0; i < d; ++i) cur[i] = -m_.coeff(i);
    for (int k = d; k <= 2 * d - 2 || k == d; ++k) {
      table_.push_back(cur);
      std::vector<mpq_class> nxt(d);
      for (int i = 0; i + 1 < d; ++i) nxt[i + 1] = cur[i];
      for (int i = 0; i < d; ++i) nxt[i] -= cur[d - 1] * m_.coeff(i);
      cur = std::move(nxt);
    }
  }

  UPoly m_;
  std::string gen_;
  std::vector<std::vector<mpq_class>> table_;
};

using ExtensionPtr = std::shared_ptr<const ExtensionField>;

class AlgebraicNumber {
 public:
  using Context = ExtensionPtr;

  AlgebraicNumber() = default;
  AlgebraicNumber(ExtensionPtr f, std::vector<mpq_class> c) : f_(std::move(f)), c_(std::move(c)) {
    c_ = f_->reduce(c_);
    for (auto& a : c_) a.canonicalize();
  }
  AlgebraicNumber(ExtensionPtr f, const mpq_class& a) : f_(std::move(f)) {
    c_.assign(f_->degree(), 0);
    c_[0] = a;
  }
  static AlgebraicNumber from_rational(const ExtensionPtr& f, const mpq_class& q) {
    return AlgebraicNumber(f, q);
  }
  static AlgebraicNumber generator(const ExtensionPtr& f) {
    std::vector<mpq_class> v(f->degree(), 0);
    if (f->degree() == 1) v[0] = -f->minpoly().coeff(0);
    else v[1] = 1;
    return AlgebraicNumber(f, v);
  }

  const ExtensionPtr& field() const { return f_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  std::vector<mpq_class> rational_coordinates() const { return c_; }

  bool is_zero() const {
    for (auto& a : c_)
      if (a != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  int sign() const { return is_rational() ? sgn(c_.empty() ? mpq_class(0) : c_[0]) : 0; }

  AlgebraicNumber operator-() const {
    AlgebraicNumber r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  AlgebraicNumber& operator+=(const AlgebraicNumber& o) {
    if (!o.f_) return *this;
    adopt(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  AlgebraicNumber& operator-=(const AlgebraicNumber& o) {
    if (!o.f_) return *this;
    adopt(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  AlgebraicNumber& operator*=(const AlgebraicNumber& o) {
    if (!f_) return *this;
    if (!o.f_) {
      for (auto& a : c_) a = 0;
      return *this;
    }
    int d = f_->degree();
    std::vector<mpq_class> p(2 * d - 1);
    for (int i = 0; i < d; ++i) {
      if (c_[i] == 0) continue;
      for (int j = 0; j < d; ++j) p[i + j] += c_[i] * o.c_[j];
    }
    c_ = f_->reduce(p);
    return *this;
  }
  AlgebraicNumber inverse() const {
    if (is_zero()) throw DivisionByZero();
    UPoly a(c_);
    auto [g, s] = UPoly::half_gcdex(a, f_->minpoly());
    if (g.degree() > 0)
      throw NotInvertible("element " + to_string() + " is not invertible: minimal polynomial has factor " +
                          g.to_string(f_->generator()));
    std::vector<mpq_class> v = s.coeffs();
    v.resize(f_->degree());
    return AlgebraicNumber(f_, v);
  }
  AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this *= o.inverse(); }

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!a.f_ || !b.f_) return a.is_zero() && b.is_zero();
    return a.c_ == b.c_;
  }
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

  std::string to_string() const {
    if (!f_) return "0";
    return UPoly(c_).to_string(f_->generator());
  }
  bool is_atomic() const {
    int n = 0;
    for (auto& a : c_) n += (a != 0);
    return n <= 1;
  }

 private:
  void adopt(const AlgebraicNumber& o) {
    if (!f_) {
      f_ = o.f_;
      c_.assign(f_->degree(), 0);
    }
  }
  ExtensionPtr f_;
  std::vector<mpq_class> c_;
};

inline AlgebraicNumber field_invert(const AlgebraicNumber& a) { return a.inverse(); }

}  // namespace netlog
