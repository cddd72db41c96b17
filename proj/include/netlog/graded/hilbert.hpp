#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "netlog/exact_algebra.hpp"
#include "netlog/groebner/buchberger.hpp"

namespace netlog {

// Laurent polynomial in T with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int e, const mpz_class& c = 1) {
    LaurentPoly p;
    if (c != 0) p.c_[e] = c;
    return p;
  }

  const std::map<int, mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int low() const { return c_.begin()->first; }
  int high() const { return c_.rbegin()->first; }
  mpz_class at_one() const {
    mpz_class s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add(e, -c);
    return *this;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_) r.add(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly shifted(int s) const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[e + s] = c;
    return r;
  }
  // Exact division by (1 - T); requires at_one() == 0.
  LaurentPoly divide_one_minus_t() const {
    LaurentPoly r;
    mpz_class acc = 0;
    if (is_zero()) return r;
    for (int e = low(); e < high(); ++e) {
      auto it = c_.find(e);
      if (it != c_.end()) acc += it->second;
      if (acc != 0) r.c_[e] = acc;
    }
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

 private:
  void add(int e, const mpz_class& c) {
    auto& x = c_[e];
    x += c;
    if (x == 0) c_.erase(e);
  }
  std::map<int, mpz_class> c_;
};

inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// C(t + a, k) as a polynomial in t.
inline UPoly binomial_poly(long a, int k) {
  UPoly p = UPoly::constant(1);
  mpz_class fact = 1;
  for (int i = 0; i < k; ++i) {
    p = p * UPoly(std::vector<mpq_class>{mpq_class(a - i), 1});
    fact *= i + 1;
  }
  return p * UPoly::constant(mpq_class(1, 1) / mpq_class(fact));
}

namespace detail {

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool red = false;
    for (auto& h : out)
      if (h.divides(g)) {
        red = true;
        break;
      }
    if (!red) out.push_back(g);
  }
  gens = std::move(out);
}

// Numerator N(T) of the Hilbert series N(T)/(1-T)^n of S/(gens).
inline LaurentPoly monomial_numerator(std::vector<Monomial> gens, int nvars) {
  minimalize(gens);
  if (gens.empty()) return LaurentPoly::monomial(0);
  for (auto& g : gens)
    if (g.is_one()) return LaurentPoly();
  // Base case: pairwise coprime generators.
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!Monomial::coprime(gens[i], gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    LaurentPoly p = LaurentPoly::monomial(0);
    for (auto& g : gens) {
      LaurentPoly f = LaurentPoly::monomial(0);
      f -= LaurentPoly::monomial(g.degree());
      p = p * f;
    }
    return p;
  }
  // Pivot x_v^e with v in the most generators and e its least exponent there;
  // x_v^e is then not in the ideal and both branches shrink.
  std::vector<int> count(nvars, 0);
  for (auto& g : gens)
    for (int i = 0; i < nvars; ++i)
      if (g[i] > 0) ++count[i];
  int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = 1 << 20;
  for (auto& g : gens)
    if (g[v] > 0) e = std::min(e, g[v]);
  Monomial p = Monomial::var(v, e);
  std::vector<Monomial> plus = gens, colon;
  plus.push_back(p);
  for (auto& g : gens) {
    Monomial q = g;
    q.set(v, std::max(0, g[v] - e));
    colon.push_back(q);
  }
  LaurentPoly r = monomial_numerator(std::move(plus), nvars);
  r += monomial_numerator(std::move(colon), nvars).shifted(e);
  return r;
}

}  // namespace detail

// Hilbert series Q(T)/(1-T)^n of a graded module.
struct HilbertSeries {
  LaurentPoly numerator;
  int nvars = 0;

  // Exact value of the Hilbert function in degree t.
  mpz_class value(int t) const {
    mpz_class s = 0;
    for (auto& [j, q] : numerator.coeffs()) {
      if (j > t) break;
      s += q * binomial(t - j + nvars - 1, nvars - 1);
    }
    return s;
  }

  // Reduced form: numerator with (1-T) factors removed, and the remaining
  // pole order (Krull dimension of the module).
  std::pair<LaurentPoly, int> reduced() const {
    LaurentPoly q = numerator;
    int d = nvars;
    while (d > 0 && !q.is_zero() && q.at_one() == 0) {
      q = q.divide_one_minus_t();
      --d;
    }
    if (q.is_zero()) d = 0;
    return {q, d};
  }

  int dimension() const { return reduced().second; }

  UPoly polynomial() const {
    auto [q, d] = reduced();
    UPoly p;
    if (d == 0) return p;
    for (auto& [j, c] : q.coeffs()) p = p + binomial_poly(d - 1 - j, d - 1) * UPoly::constant(mpq_class(c));
    return p;
  }

  // Every t >= this bound satisfies HF(t) = HP(t).
  int agreement_bound() const {
    auto [q, d] = reduced();
    if (q.is_zero()) return 0;
    return d == 0 ? q.high() + 1 : q.high() - d + 1;
  }

  HilbertSeries& operator+=(const HilbertSeries& o) {
    numerator += o.numerator;
    return *this;
  }
  HilbertSeries& operator-=(const HilbertSeries& o) {
    numerator -= o.numerator;
    return *this;
  }
};

// Series of F / M where `gb` is a Groebner basis of M inside F.
template <class K>
HilbertSeries hilbert_series_of_quotient(const SubmoduleBasis<K>& gb, int nvars) {
  if (!gb.groebner) throw InputError("Hilbert series requires a Groebner basis");
  std::vector<std::vector<Monomial>> leads(gb.module.rank());
  for (auto& g : gb.gens)
    if (!g.is_zero()) leads[g.lead().comp].push_back(g.lead().m);
  HilbertSeries h;
  h.nvars = nvars;
  for (int k = 0; k < gb.module.rank(); ++k)
    h.numerator += detail::monomial_numerator(leads[k], nvars).shifted(-gb.module.twist(k));
  return h;
}

// Hilbert function table over a window with the Hilbert polynomial.
struct HilbertData {
  int lo = 0, hi = 0;
  std::vector<mpz_class> values;  // values[t - lo]
  UPoly polynomial;
  int agreement_index = 0;
  bool window_confirms = true;  // false when agreement_index > hi

  mpz_class at(int t) const { return values.at(static_cast<std::size_t>(t - lo)); }
  friend bool operator==(const HilbertData& a, const HilbertData& b) {
    return a.lo == b.lo && a.hi == b.hi && a.values == b.values && a.polynomial == b.polynomial &&
           a.agreement_index == b.agreement_index;
  }
};

inline mpz_class eval_integer(const UPoly& p, long t) {
  mpq_class v = p.eval(mpq_class(t));
  if (v.get_den() != 1) throw InputError("Hilbert polynomial is not integer-valued at " + std::to_string(t));
  return v.get_num();
}

inline HilbertData hilbert_data(const HilbertSeries& hs, int lo, int hi) {
  if (hi < lo) throw InputError("empty degree window");
  HilbertData d;
  d.lo = lo;
  d.hi = hi;
  for (int t = lo; t <= hi; ++t) d.values.push_back(hs.value(t));
  d.polynomial = hs.polynomial();
  int bound = hs.agreement_bound();
  int idx = std::max(bound, lo);
  for (int t = bound - 1; t >= lo; --t) {
    if (hs.value(t) != eval_integer(d.polynomial, t)) break;
    idx = t;
  }
  d.agreement_index = idx;
  d.window_confirms = idx <= hi;
  return d;
}

// Hilbert polynomial rendered in t, e.g. "2*t^2+6*t+3".
inline std::string hp_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    mpq_class a = p.coeff(i);
    if (a == 0) continue;
    mpq_class m = abs(a);
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    std::string coef = (m == 1 && i > 0) ? "" : m.get_str();
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    out += out.empty() ? (sgn(a) < 0 ? "-" : "") + term : (sgn(a) < 0 ? "-" : "+") + term;
  }
  return out;
}

inline UPoly parse_hp(const std::string& s) { return parse_upoly(s, "t"); }

}  // namespace netlog
