#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"

namespace netlog {

// Dense univariate polynomial over QQ, coefficients stored low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const mpq_class& a) { return UPoly(std::vector<mpq_class>{a}); }
  static UPoly x() { return UPoly(std::vector<mpq_class>{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpq_class(0);
  }
  mpq_class lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    mpq_class l = lead();
    for (auto& a : r.c_) a /= l;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<mpq_class> r = a.c_;
    int db = b.degree();
    std::vector<mpq_class> q(std::max(0, a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
      if (r[i] == 0) continue;
      mpq_class f = r[i] / b.lead();
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Returns (g, s) with s*a = g mod b, g = gcd(a, b) monic.
  static std::pair<UPoly, UPoly> half_gcdex(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b, s0 = constant(1), s1;
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      UPoly s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    mpq_class l = r0.lead();
    for (auto& c : r0.c_) c /= l;
    for (auto& c : s0.c_) c /= l;
    return {r0, s0};
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
  }

  mpq_class eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // Distinct rational roots, ascending. Uses the rational root theorem on the
  // primitive integer multiple of the square-free part.
  std::vector<mpq_class> rational_roots() const;

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const mpq_class& a = c_[i];
      if (a == 0) continue;
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      mpq_class m = abs(a);
      std::string coef = (m == 1 && i > 0) ? "" : m.get_str();
      std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
      if (out.empty()) out = (sgn(a) < 0 ? "-" : "") + term;
      else out += (sgn(a) < 0 ? "-" : "+") + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

namespace detail {

// All positive divisors of n (n > 0) by trial division.
inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> fac;
  const mpz_class limit = 100000000;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (p > limit) throw CapExceeded("integer too large to factor for rational root search");
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fac) {
    std::size_t m = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < m; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

inline std::vector<mpq_class> UPoly::rational_roots() const {
  if (degree() <= 0) return {};
  UPoly f = *this;
  UPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) f = divmod(f, g).first;
  std::vector<mpq_class> roots;
  int shift = 0;
  while (shift <= f.degree() && f.coeff(shift) == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  std::vector<mpq_class> rest(f.c_.begin() + shift, f.c_.end());
  if (rest.size() <= 1) return roots;
  mpz_class den = 1;
  for (auto& a : rest) den = lcm(den, mpz_class(a.get_den()));
  std::vector<mpz_class> ic;
  for (auto& a : rest) ic.push_back(mpz_class(a * den));
  UPoly h(rest);
  auto ps = detail::positive_divisors(abs(ic.front()));
  auto qs = detail::positive_divisors(abs(ic.back()));
  for (auto& p : ps)
    for (auto& q : qs)
      for (int s : {1, -1}) {
        mpq_class cand(p * s, q);
        cand.canonicalize();
        if (h.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace netlog
