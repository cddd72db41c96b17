#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/duality.hpp"
#include "netlog/graded/fitting.hpp"
#include "netlog/graded/serialize.hpp"
#include "netlog/pipeline/ci_pair.hpp"

namespace netlog {

// A map P¹ -> P^N given by N+1 forms of common degree e in k[s,t].
template <class K>
struct RationalCurve {
  std::string name;
  RingPtr<K> line;
  std::vector<Poly<K>> forms;
  bool in_D = false;

  int degree() const {
    for (auto& f : forms)
      if (!f.is_zero()) return f.degree();
    return 0;
  }
};

template <class K>
RingPtr<K> projective_line(const typename K::Context& ctx) {
  return PolyRing<K>::make({"s", "t"}, ctx);
}

template <class K>
std::vector<Poly<K>> pull_back_ideal(const RationalCurve<K>& C, const std::vector<Poly<K>>& I) {
  std::vector<Poly<K>> out;
  for (auto& f : I) out.push_back(substitute(f, C.forms, *C.line));
  return out;
}

template <class K>
bool curve_lies_on(const RationalCurve<K>& C, const std::vector<Poly<K>>& I) {
  auto p = pull_back_ideal(C, I);
  return std::all_of(p.begin(), p.end(), [](const Poly<K>& f) { return f.is_zero(); });
}

// The curve meets V(I) nowhere.
template <class K>
bool curve_avoids(const RationalCurve<K>& C, const std::vector<Poly<K>>& I, const GroebnerOptions& opt = {}) {
  return krull_dimension(*C.line, pull_back_ideal(C, I), opt) == 0;
}

template <class K>
RationalCurve<K> make_rational_curve(std::string name, RingPtr<K> line, std::vector<Poly<K>> forms,
                                     const std::vector<Poly<K>>& X, const std::vector<Poly<K>>& D = {},
                                     const GroebnerOptions& opt = {}) {
  if (line->nvars() != 2) throw InputError("a rational curve is parametrized by two variables");
  RationalCurve<K> C{std::move(name), std::move(line), std::move(forms), false};
  const int e = C.degree();
  if (e < 1) throw InputError("curve '" + C.name + "': forms must have positive common degree");
  for (auto& f : C.forms)
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != e))
      throw InputError("curve '" + C.name + "': forms must be homogeneous of a common degree");
  if (krull_dimension(*C.line, C.forms, opt) != 0)
    throw CheckFailed("no common factor", "curve '" + C.name + "': the forms share a factor");
  if (!curve_lies_on(C, X)) throw CheckFailed("curve on X", "curve '" + C.name + "' does not lie on X");
  C.in_D = !D.empty() && curve_lies_on(C, D);
  return C;
}

// M ⊗ O_C as a graded k[s,t]-module.
template <class K>
PresentedModule<K> pullback(const PresentedModule<K>& M, const RationalCurve<K>& C, const GroebnerOptions& opt = {}) {
  if (static_cast<int>(C.forms.size()) != M.nvars())
    throw InputError("curve '" + C.name + "' lives in a different projective space");
  if (!curve_lies_on(C, M.ideal())) throw CheckFailed("curve on X", "curve '" + C.name + "' does not lie on X");
  auto P = M.presentation(opt);
  const int e = C.degree();
  std::vector<int> tw;
  for (int t : P.ambient().twists) tw.push_back(t * e);
  std::vector<Vec<K>> rels;
  for (auto& v : P.relations()) {
    std::vector<Poly<K>> comps;
    for (auto& c : v.components(P.ambient().rank())) comps.push_back(substitute(c, C.forms, *C.line));
    Vec<K> w = Vec<K>::from_components(comps);
    if (!w.is_zero()) rels.push_back(std::move(w));
  }
  return PresentedModule<K>(C.line, FreeModule(tw), std::nullopt, rels, {}, true);
}

struct SplittingType {
  std::vector<int> degrees;  // a_1 >= a_2 >= ...

  int rank() const { return static_cast<int>(degrees.size()); }
  int total() const {
    int s = 0;
    for (int a : degrees) s += a;
    return s;
  }
  friend bool operator==(const SplittingType& a, const SplittingType& b) { return a.degrees == b.degrees; }
};

inline std::string to_string(const SplittingType& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.degrees.size(); ++i) out += (i ? "," : "") + std::to_string(s.degrees[i]);
  return out + ")";
}

// Splitting of the vector bundle (M~ modulo torsion) on P¹, read from the
// generators of the reflexive (hence free) hull.
template <class K>
SplittingType splitting_type(const PresentedModule<K>& Mc, const GroebnerOptions& opt = {}) {
  if (Mc.nvars() != 2) throw InputError("splitting types are computed over k[s,t]");
  auto hs = Mc.hilbert_series();
  auto [q, d] = hs.reduced();
  SplittingType out;
  if (d < 2) return out;
  const int rank = static_cast<int>(q.at_one().get_si());
  auto hull = double_dual(Mc.with_ideal({}, true), opt).pruned(opt);
  if (!hull.relations().empty() || hull.ambient().rank() != rank)
    throw CheckFailed("free splitting", "the reflexive hull over k[s,t] is not free of the expected rank");
  out.degrees = hull.ambient().twists;
  std::sort(out.degrees.rbegin(), out.degrees.rend());
  return out;
}

template <class K>
SplittingType restrict_to_curve(const PresentedModule<K>& M, const RationalCurve<K>& C,
                                const GroebnerOptions& opt = {}) {
  return splitting_type(pullback(M, C, opt), opt);
}

// The two rulings of Q = V(x0x3 - x1x2) through the parameters [u0:u1]:
// A-family (u0 s, u0 t, u1 s, u1 t) containing A = V(x0,x1), class (1,0);
// B-family (s u0, s u1, t u0, t u1) containing B = V(x0,x2), class (0,1).
template <class K>
RationalCurve<K> quadric_ruling(const RingPtr<K>& line, char family, const K& u0, const K& u1) {
  auto s = line->var(0), t = line->var(1);
  std::vector<Poly<K>> f;
  if (family == 'A')
    f = {s.scaled(u0), t.scaled(u0), s.scaled(u1), t.scaled(u1)};
  else if (family == 'B')
    f = {s.scaled(u0), s.scaled(u1), t.scaled(u0), t.scaled(u1)};
  else
    throw InputError("ruling family must be 'A' or 'B'");
  if (u0.is_zero() && u1.is_zero()) throw InputError("ruling parameter must be a projective point");
  return RationalCurve<K>{std::string(1, family) + "-ruling", line, f, false};
}

// Rulings through a point p of the standard quadric.
template <class K>
std::pair<RationalCurve<K>, RationalCurve<K>> quadric_rulings_through(const RingPtr<K>& line, const std::vector<K>& p) {
  if (p.size() != 4) throw InputError("quadric points have four coordinates");
  if (!(p[0] * p[3] - p[1] * p[2]).is_zero()) throw CheckFailed("point on X", "point is not on V(x0x3-x1x2)");
  bool a = !(p[0].is_zero() && p[2].is_zero());
  bool b = !(p[0].is_zero() && p[1].is_zero());
  auto A = a ? quadric_ruling(line, 'A', p[0], p[2]) : quadric_ruling(line, 'A', p[1], p[3]);
  auto B = b ? quadric_ruling(line, 'B', p[0], p[1]) : quadric_ruling(line, 'B', p[2], p[3]);
  return {A, B};
}

template <class K>
bool is_standard_quadric(const PresentedModule<K>& M) {
  const PolyRing<K>& S = *M.ring();
  if (S.nvars() != 4) return false;
  Poly<K> q = S.var(0) * S.var(3) - S.var(1) * S.var(2);
  return same_ideal(M.ideal(), std::vector<Poly<K>>{q});
}

struct Bidegree {
  int a = 0, b = 0;
  friend bool operator==(const Bidegree& x, const Bidegree& y) { return x.a == y.a && x.b == y.b; }
};

// c1 = (a, b) on Q from determinant degrees on rulings avoiding the
// non-locally-free locus.
template <class K>
Bidegree bidegree_c1(const PresentedModule<K>& M, const GroebnerOptions& opt = {}) {
  if (!is_standard_quadric(M)) throw InputError("bidegree_c1 needs a module over k[x0..x3]/(x0x3-x1x2)");
  const PolyRing<K>& S = *M.ring();
  auto line = projective_line<K>(S.context());
  auto [q, d] = M.hilbert_series().reduced();
  if (d != 3) throw InputError("bidegree_c1 needs a module supported on all of Q");
  mpz_class lead = q.at_one() / 2;
  const int rank = static_cast<int>(lead.get_si());
  std::vector<Poly<K>> bad = fitting_ideal(M, rank, opt);
  auto pick = [&](char fam) {
    for (long k = 1; k < 64; ++k) {
      auto C = quadric_ruling(line, fam, S.scalar(k), S.scalar(k * k + 1));
      if (curve_avoids(C, bad, opt)) return C;
    }
    throw CapExceeded("no ruling avoids the singular locus");
  };
  Bidegree c;
  c.a = restrict_to_curve(M, pick('B'), opt).total();
  c.b = restrict_to_curve(M, pick('A'), opt).total();
  return c;
}

// Lines on the Fermat cubic Σ x_i³ = 0: x_i = -ζ x_j, x_k = -ζ' x_l with
// ζ³ = ζ'³ = 1. Over ℚ only ζ = 1 is available; over ℚ(w) with
// w² + w + 1 = 0 all 27 lines are produced.
template <class K>
std::vector<RationalCurve<K>> fermat_lines(const RingPtr<K>& line) {
  const PolyRing<K>& L = *line;
  std::vector<K> roots{L.scalar(1)};
  std::vector<std::string> root_names{"1"};
  if constexpr (std::is_same_v<K, AlgebraicNumber>) {
    const auto& f = L.context();
    UPoly cyc({mpq_class(1), mpq_class(1), mpq_class(1)});
    if (f->minpoly() == cyc) {
      K w = K::generator(f);
      roots.push_back(w);
      roots.push_back(w * w);
      root_names.push_back(f->generator());
      root_names.push_back(f->generator() + "^2");
    }
  }
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  std::vector<RationalCurve<K>> out;
  auto s = L.var(0), t = L.var(1);
  for (auto& pr : pairings)
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = 0; b < roots.size(); ++b) {
        std::vector<Poly<K>> f(4);
        f[pr[1]] = s;
        f[pr[0]] = s.scaled(-roots[a]);
        f[pr[3]] = t;
        f[pr[2]] = t.scaled(-roots[b]);
        std::string name = "L" + std::to_string(pr[0]) + std::to_string(pr[1]) + "|" + std::to_string(pr[2]) +
                           std::to_string(pr[3]) + "(" + root_names[a] + "," + root_names[b] + ")";
        out.push_back(RationalCurve<K>{name, line, f, false});
      }
  return out;
}

// Curve catalog file: {"field": ..., "curves": [{"name": ..., "forms": [...]}]}
// with forms in the variables s, t.
template <class K>
std::vector<RationalCurve<K>> curves_from_json(const json& j, const RingPtr<K>& ambient,
                                               const std::vector<Poly<K>>& X, const std::vector<Poly<K>>& D = {},
                                               const GroebnerOptions& opt = {}) {
  if (j.contains("field") && !(field_from_json(j.at("field")) == ambient->field_spec()))
    throw InputError("curve catalog field does not match the problem field");
  auto line = projective_line<K>(ambient->context());
  std::vector<RationalCurve<K>> out;
  for (auto& c : j.at("curves")) {
    std::vector<Poly<K>> forms;
    for (auto& s : c.at("forms")) forms.push_back(parse_poly(s.get<std::string>(), *line));
    if (static_cast<int>(forms.size()) != ambient->nvars())
      throw InputError("curve '" + c.at("name").get<std::string>() + "' has the wrong number of forms");
    out.push_back(make_rational_curve(c.at("name").get<std::string>(), line, forms, X, D, opt));
  }
  return out;
}

template <class K>
json curves_to_json(const std::vector<RationalCurve<K>>& cs) {
  json j;
  if (!cs.empty()) j["field"] = field_to_json(cs.front().line->field_spec());
  j["curves"] = json::array();
  for (auto& c : cs) {
    json f = json::array();
    for (auto& p : c.forms) f.push_back(to_string(p, *c.line));
    j["curves"].push_back({{"name", c.name}, {"forms", f}});
  }
  return j;
}

}  // namespace netlog
