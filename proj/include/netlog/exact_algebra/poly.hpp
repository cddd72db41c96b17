#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/exact_algebra/field.hpp"
#include "netlog/exact_algebra/monomial.hpp"

namespace netlog {

template <class K>
struct Term {
  Monomial m;
  K c;
};

// Sparse polynomial; terms strictly descending in grevlex, no zero coefficients.
// The ring (variable names, field context) is supplied by PolyRing.
template <class K>
class Poly {
 public:
  Poly() = default;

  static Poly from_terms(std::vector<Term<K>> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term<K>& a, const Term<K>& b) {
      return Monomial::compare(a.m, b.m) > 0;
    });
    Poly p;
    for (auto& t : terms) {
      if (!p.t_.empty() && p.t_.back().m == t.m) {
        p.t_.back().c += t.c;
        if (p.t_.back().c.is_zero()) p.t_.pop_back();
      } else if (!t.c.is_zero()) {
        p.t_.push_back(std::move(t));
      }
    }
    return p;
  }
  static Poly monomial(const Monomial& m, const K& c) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<Term<K>>& terms() const { return t_; }
  const Monomial& lead_monomial() const { return t_.front().m; }
  const K& lead_coeff() const { return t_.front().c; }

  // Maximal total degree, -1 for zero.
  int degree() const {
    int d = -1;
    for (auto& t : t_) d = std::max(d, t.m.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (auto& t : t_)
      if (t.m.degree() != t_.front().m.degree()) return false;
    return true;
  }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.front().m.is_one()); }

  K coeff(const Monomial& m) const {
    for (auto& t : t_)
      if (t.m == m) return t.c;
    return K();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) return a.mul_term(b.t_[0].m, b.t_[0].c);
    if (a.size() == 1) return b.mul_term(a.t_[0].m, a.t_[0].c);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (auto& x : a.t_)
      for (auto& y : b.t_) {
        Monomial m = x.m * y.m;
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(m, x.c * y.c);
        else it->second += x.c * y.c;
      }
    std::vector<Term<K>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms.push_back({m, c});
    return from_terms(std::move(terms));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly mul_term(const Monomial& m, const K& c) const {
    if (c.is_zero()) return {};
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
    return r;
  }
  Poly scaled(const K& c) const { return mul_term(Monomial(), c); }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      int c = i == a.t_.size() ? -1 : j == b.t_.size() ? 1 : Monomial::compare(a.t_[i].m, b.t_[j].m);
      if (c > 0) {
        r.t_.push_back(a.t_[i++]);
      } else if (c < 0) {
        r.t_.push_back({b.t_[j].m, subtract ? -b.t_[j].c : b.t_[j].c});
        ++j;
      } else {
        K s = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
        if (!s.is_zero()) r.t_.push_back({a.t_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term<K>> t_;
};

template <class K>
Poly<K> partial_derivative(const Poly<K>& f, int i) {
  if (i < 0 || i >= kMaxVars) throw InputError("variable index out of range");
  std::vector<Term<K>> out;
  for (auto& t : f.terms()) {
    int e = t.m[i];
    if (e == 0) continue;
    Monomial m = t.m;
    m.set(i, e - 1);
    out.push_back({m, times(t.c, e)});
  }
  return Poly<K>::from_terms(std::move(out));
}

template <class K>
Poly<K> power(const Poly<K>& f, int e, const Poly<K>& one) {
  Poly<K> r = one, b = f;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class K>
K evaluate(const Poly<K>& f, const std::vector<K>& point) {
  K acc;
  for (auto& t : f.terms()) {
    K v = t.c;
    for (int i = 0; i < static_cast<int>(point.size()); ++i)
      for (int k = 0; k < t.m[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

template <class K>
class PolyRing;

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

// Variable names plus field context; grevlex order, standard grading.
template <class K>
class PolyRing {
 public:
  using Ctx = typename K::Context;

  PolyRing(std::vector<std::string> names, Ctx ctx) : names_(std::move(names)), ctx_(std::move(ctx)) {
    if (names_.empty()) throw InputError("a polynomial ring needs at least one variable");
    if (static_cast<int>(names_.size()) > kMaxVars)
      throw InputError("too many variables (limit " + std::to_string(kMaxVars) + ")");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InputError("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw InputError("duplicate variable name " + names_[i]);
      if (names_[i] == generator_name(ctx_)) throw InputError("variable name clashes with field generator");
    }
  }

  static RingPtr<K> make(std::vector<std::string> names, Ctx ctx) {
    return std::make_shared<const PolyRing<K>>(std::move(names), std::move(ctx));
  }

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const Ctx& context() const { return ctx_; }
  FieldSpec field_spec() const { return field_spec_of(ctx_); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  K scalar(long n) const { return K::from_rational(ctx_, mpq_class(n)); }
  K scalar(const mpq_class& q) const { return K::from_rational(ctx_, q); }
  Poly<K> zero() const { return {}; }
  Poly<K> one() const { return constant(scalar(1)); }
  Poly<K> constant(const K& c) const { return Poly<K>::monomial(Monomial(), c); }
  Poly<K> var(int i) const {
    if (i < 0 || i >= nvars()) throw InputError("variable index out of range");
    return Poly<K>::monomial(Monomial::var(i), scalar(1));
  }
  Poly<K> monomial(const Monomial& m) const { return Poly<K>::monomial(m, scalar(1)); }

  // All monomials of total degree d, descending.
  std::vector<Monomial> monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial m;
    enumerate(0, d, m, out);
    std::sort(out.begin(), out.end(), MonomialGreater());
    return out;
  }

  bool same_as(const PolyRing& o) const { return names_ == o.names_ && ctx_equal(o); }

 private:
  bool ctx_equal(const PolyRing& o) const {
    if constexpr (std::is_same_v<Ctx, RationalField>) {
      return true;
    } else {
      return ctx_ == o.ctx_ || *ctx_ == *o.ctx_;
    }
  }
  void enumerate(int i, int left, Monomial& m, std::vector<Monomial>& out) const {
    if (i == nvars() - 1) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      enumerate(i + 1, left - e, m, out);
    }
    m.set(i, 0);
  }

  std::vector<std::string> names_;
  Ctx ctx_;
};

// Ring homomorphism x_i -> images[i]. Images live in `target`; they must be
// homogeneous of one common degree (zero images are allowed).
template <class K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& images, const PolyRing<K>& target) {
  int e = -1;
  for (auto& g : images) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InputError("substitution image is not homogeneous");
    if (e < 0) e = g.degree();
    else if (g.degree() != e) throw InputError("substitution images have mixed degrees");
  }
  int n = static_cast<int>(images.size());
  std::vector<std::vector<Poly<K>>> pw(n);
  auto pow_of = [&](int i, int k) -> const Poly<K>& {
    auto& v = pw[i];
    if (v.empty()) v.push_back(target.one());
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images[i]);
    return v[k];
  };
  Poly<K> acc;
  for (auto& t : f.terms()) {
    Poly<K> term = target.constant(t.c);
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.m[i] == 0) continue;
      if (i >= n) throw InputError("substitution: missing image for a variable");
      term = term * pow_of(i, t.m[i]);
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

}  // namespace netlog
