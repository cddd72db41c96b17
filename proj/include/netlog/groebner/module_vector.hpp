#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/exact_algebra.hpp"

namespace netlog {

// Graded free module  ⊕_k S(twist[k]); generator e_k sits in degree -twist[k].
struct FreeModule {
  std::vector<int> twists;

  FreeModule() = default;
  explicit FreeModule(std::vector<int> t) : twists(std::move(t)) {}
  static FreeModule uniform(int rank, int twist) { return FreeModule(std::vector<int>(rank, twist)); }

  int rank() const { return static_cast<int>(twists.size()); }
  int twist(int k) const { return twists.at(k); }
  int generator_degree(int k) const { return -twists.at(k); }

  FreeModule shifted(int s) const {
    FreeModule r = *this;
    for (auto& t : r.twists) t += s;
    return r;
  }
  FreeModule dual() const {
    FreeModule r = *this;
    for (auto& t : r.twists) t = -t;
    return r;
  }
  static FreeModule direct_sum(const FreeModule& a, const FreeModule& b) {
    FreeModule r = a;
    r.twists.insert(r.twists.end(), b.twists.begin(), b.twists.end());
    return r;
  }
  bool operator==(const FreeModule& o) const { return twists == o.twists; }
};

template <class K>
struct VTerm {
  int comp;
  Monomial m;
  K c;
};

// Position-over-term: smaller component index is bigger, then grevlex.
inline int pot_compare(int ca, const Monomial& a, int cb, const Monomial& b) {
  if (ca != cb) return ca < cb ? 1 : -1;
  return Monomial::compare(a, b);
}

// Element of a free module, terms strictly descending in POT order.
template <class K>
class Vec {
 public:
  Vec() = default;

  static Vec from_terms(std::vector<VTerm<K>> terms) {
    std::sort(terms.begin(), terms.end(), [](const VTerm<K>& a, const VTerm<K>& b) {
      return pot_compare(a.comp, a.m, b.comp, b.m) > 0;
    });
    Vec v;
    for (auto& t : terms) {
      if (!v.t_.empty() && v.t_.back().comp == t.comp && v.t_.back().m == t.m) {
        v.t_.back().c += t.c;
        if (v.t_.back().c.is_zero()) v.t_.pop_back();
      } else if (!t.c.is_zero()) {
        v.t_.push_back(std::move(t));
      }
    }
    return v;
  }
  static Vec unit(int k, const K& one) {
    Vec v;
    v.t_.push_back({k, Monomial(), one});
    return v;
  }
  static Vec from_poly(const Poly<K>& p, int k) {
    Vec v;
    v.t_.reserve(p.size());
    for (auto& t : p.terms()) v.t_.push_back({k, t.m, t.c});
    return v;
  }
  static Vec from_components(const std::vector<Poly<K>>& comps) {
    Vec v;
    for (int k = 0; k < static_cast<int>(comps.size()); ++k)
      for (auto& t : comps[k].terms()) v.t_.push_back({k, t.m, t.c});
    return v;
  }

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<VTerm<K>>& terms() const { return t_; }
  std::vector<VTerm<K>>& mutable_terms() { return t_; }
  const VTerm<K>& lead() const { return t_.front(); }

  int degree(const FreeModule& F) const { return t_.front().m.degree() - F.twist(t_.front().comp); }
  bool is_homogeneous(const FreeModule& F) const {
    if (t_.empty()) return true;
    int d = degree(F);
    for (auto& t : t_)
      if (t.m.degree() - F.twist(t.comp) != d) return false;
    return true;
  }

  Poly<K> component(int k) const {
    std::vector<Term<K>> out;
    for (auto& t : t_)
      if (t.comp == k) out.push_back({t.m, t.c});
    return Poly<K>::from_terms(std::move(out));
  }
  std::vector<Poly<K>> components(int rank) const {
    std::vector<std::vector<Term<K>>> parts(rank);
    for (auto& t : t_) parts.at(t.comp).push_back({t.m, t.c});
    std::vector<Poly<K>> out;
    for (auto& p : parts) out.push_back(Poly<K>::from_terms(std::move(p)));
    return out;
  }

  Vec mul_term(const Monomial& m, const K& c) const {
    Vec r;
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.comp, t.m * m, t.c * c});
    return r;
  }
  Vec scaled(const K& c) const { return mul_term(Monomial(), c); }
  Vec mul_poly(const Poly<K>& p) const {
    Vec r;
    for (auto& t : p.terms()) r = r + mul_term(t.m, t.c);
    return r;
  }
  // Shift component indices by s.
  Vec shifted_components(int s) const {
    Vec r = *this;
    for (auto& t : r.t_) t.comp += s;
    return r;
  }
  // Keep components in [lo, hi), re-indexed from 0.
  Vec slice(int lo, int hi) const {
    Vec r;
    for (auto& t : t_)
      if (t.comp >= lo && t.comp < hi) r.t_.push_back({t.comp - lo, t.m, t.c});
    return r;
  }

  Vec operator-() const {
    Vec r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  friend Vec operator+(const Vec& a, const Vec& b) { return axpy(a, b, Monomial(), K(), false); }
  friend Vec operator-(const Vec& a, const Vec& b) { return axpy(a, b, Monomial(), K(), true); }

  // a - c*m*b (subtract) or a + b (plain add when c is unused).
  static Vec axpy(const Vec& a, const Vec& b, const Monomial& m, const K& c, bool subtract,
                  bool use_scale = false) {
    Vec r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      int cmp;
      Monomial bm;
      if (j < b.t_.size()) bm = use_scale ? b.t_[j].m * m : b.t_[j].m;
      if (i == a.t_.size()) cmp = -1;
      else if (j == b.t_.size()) cmp = 1;
      else cmp = pot_compare(a.t_[i].comp, a.t_[i].m, b.t_[j].comp, bm);
      if (cmp > 0) {
        r.t_.push_back(a.t_[i++]);
        continue;
      }
      K bc = use_scale ? b.t_[j].c * c : b.t_[j].c;
      if (subtract) bc = -bc;
      if (cmp < 0) {
        r.t_.push_back({b.t_[j].comp, bm, std::move(bc)});
        ++j;
      } else {
        K s = a.t_[i].c + bc;
        if (!s.is_zero()) r.t_.push_back({a.t_[i].comp, a.t_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }
  // a - c*m*b
  static Vec sub_scaled(const Vec& a, const Vec& b, const Monomial& m, const K& c) {
    return axpy(a, b, m, c, true, true);
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].comp != b.t_[i].comp || a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

 private:
  std::vector<VTerm<K>> t_;
};

// Scale to a canonical representative: primitive integer vector with positive
// leading coefficient over QQ, monic otherwise.
template <class K>
void normalize(Vec<K>& v) {
  if (v.is_zero()) return;
  auto& ts = v.mutable_terms();
  if constexpr (std::is_same_v<K, Rational>) {
    mpz_class den = 1, num = 0;
    for (auto& t : ts) den = lcm(den, t.c.denominator());
    for (auto& t : ts) num = gcd(num, mpz_class(t.c.numerator() * (den / t.c.denominator())));
    mpq_class f(den, num);
    f.canonicalize();
    if (ts.front().c.sign() < 0) f = -f;
    Rational rf(f);
    for (auto& t : ts) t.c *= rf;
  } else {
    K inv = ts.front().c.inverse();
    for (auto& t : ts) t.c *= inv;
  }
}

template <class K>
void normalize(Poly<K>& p) {
  Vec<K> v = Vec<K>::from_poly(p, 0);
  normalize(v);
  p = v.component(0);
}

template <class K>
std::string to_string(const Vec<K>& v, int rank, const PolyRing<K>& R) {
  std::string s = "[";
  auto comps = v.components(rank);
  for (int k = 0; k < rank; ++k) {
    if (k) s += ", ";
    s += to_string(comps[k], R);
  }
  return s + "]";
}

}  // namespace netlog
