#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/groebner/buchberger.hpp"
#include "netlog/groebner/graded_map.hpp"

namespace netlog {

// Generators of ker(phi) in phi.source; over S/I when `quotient` is non-empty,
// i.e. {v : phi(v) ∈ I·target}. The result is a Groebner basis.
template <class K>
SubmoduleBasis<K> kernel_of_map(const GradedMap<K>& phi, const std::vector<Poly<K>>& quotient = {},
                                const GroebnerOptions& opt = {}) {
  const int r0 = phi.target.rank(), r1 = phi.source.rank();
  if (r1 == 0) return SubmoduleBasis<K>(phi.source, {}, true);
  FreeModule F = FreeModule::direct_sum(phi.target, phi.source);
  const K one = phi.ring->scalar(1);
  std::vector<Vec<K>> gens;
  for (auto& f : quotient)
    for (int k = 0; k < r0; ++k) gens.push_back(Vec<K>::from_poly(f, k));
  std::size_t nb = gens.size();
  for (int j = 0; j < r1; ++j) gens.push_back(phi.columns[j] + Vec<K>::unit(r0 + j, one));
  detail::BuchbergerEngine<K> eng(F, opt);
  eng.run(gens, nb);
  std::vector<Vec<K>> ker;
  for (auto& g : eng.basis())
    if (g.lead().comp >= r0) ker.push_back(g.slice(r0, r0 + r1));
  interreduce(ker);
  return SubmoduleBasis<K>(phi.source, std::move(ker), true);
}

// Map whose columns are the generators of B (source twists from their degrees).
template <class K>
GradedMap<K> generator_map(const RingPtr<K>& R, const SubmoduleBasis<K>& B) {
  std::vector<int> tw;
  std::vector<Vec<K>> cols;
  for (auto& g : B.gens) {
    if (g.is_zero()) continue;
    tw.push_back(-g.degree(B.module));
    cols.push_back(g);
  }
  return GradedMap<K>(R, FreeModule(tw), B.module, std::move(cols));
}

// First syzygies of a Groebner basis by the Schreyer construction.
template <class K>
SubmoduleBasis<K> syzygies(const RingPtr<K>& R, const SubmoduleBasis<K>& G) {
  if (!G.groebner) throw InputError("syzygies: input is not flagged as a Groebner basis");
  std::vector<Vec<K>> gs;
  for (auto& g : G.gens)
    if (!g.is_zero()) gs.push_back(g);
  std::vector<int> tw;
  for (auto& g : gs) tw.push_back(-g.degree(G.module));
  FreeModule src(tw);
  LeadIndex<K> idx;
  for (std::size_t i = 0; i < gs.size(); ++i) idx.add(i, gs[i]);
  std::vector<Vec<K>> syz;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      const auto& a = gs[i].lead();
      const auto& b = gs[j].lead();
      if (a.comp != b.comp) continue;
      Monomial l = Monomial::lcm(a.m, b.m);
      Monomial ma = l / a.m, mb = l / b.m;
      Vec<K> s = Vec<K>::sub_scaled(gs[i].mul_term(ma, b.c), gs[j], mb, a.c);
      std::vector<Quotient<K>> q;
      Vec<K> rem = reduce_vec(std::move(s), gs, idx, true, &q);
      if (!rem.is_zero()) throw InputError("syzygies: S-pair does not reduce to zero; input is not a Groebner basis");
      std::vector<VTerm<K>> terms;
      terms.push_back({static_cast<int>(i), ma, b.c});
      terms.push_back({static_cast<int>(j), mb, -a.c});
      for (auto& x : q) terms.push_back({static_cast<int>(x.index), x.m, -x.c});
      Vec<K> v = Vec<K>::from_terms(std::move(terms));
      if (v.is_zero()) continue;
      normalize(v);
      syz.push_back(std::move(v));
    }
  (void)R;
  return SubmoduleBasis<K>(src, std::move(syz), false);
}

// {v ∈ F : f·v ∈ M} over S/I.
template <class K>
SubmoduleBasis<K> colon(const RingPtr<K>& R, const SubmoduleBasis<K>& M, const Poly<K>& f,
                        const std::vector<Poly<K>>& quotient = {}, const GroebnerOptions& opt = {}) {
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  if (!f.is_homogeneous()) throw InputError("colon by an inhomogeneous polynomial");
  const FreeModule& F = M.module;
  const int r = F.rank();
  std::vector<int> tw;
  std::vector<Vec<K>> cols;
  for (int k = 0; k < r; ++k) {
    tw.push_back(F.twist(k) - f.degree());
    cols.push_back(Vec<K>::from_poly(f, k));
  }
  for (auto& g : M.gens) {
    if (g.is_zero()) continue;
    tw.push_back(-g.degree(F));
    cols.push_back(g);
  }
  GradedMap<K> phi(R, FreeModule(tw), F, std::move(cols));
  auto ker = kernel_of_map(phi, quotient, opt);
  std::vector<Vec<K>> out;
  for (auto& v : ker.gens) {
    Vec<K> p = v.slice(0, r);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return groebner(SubmoduleBasis<K>(F, std::move(out)), quotient, opt);
}

// U ∩ V inside the common free module, over S/I.
template <class K>
SubmoduleBasis<K> intersect(const RingPtr<K>& R, const SubmoduleBasis<K>& U, const SubmoduleBasis<K>& V,
                            const std::vector<Poly<K>>& quotient = {}, const GroebnerOptions& opt = {}) {
  if (!(U.module == V.module)) throw InputError("intersect: ambient modules differ");
  const FreeModule& F = U.module;
  std::vector<int> tw;
  std::vector<Vec<K>> cols, ucols;
  for (auto& g : U.gens) {
    if (g.is_zero()) continue;
    tw.push_back(-g.degree(F));
    cols.push_back(g);
    ucols.push_back(g);
  }
  const int nu = static_cast<int>(cols.size());
  for (auto& g : V.gens) {
    if (g.is_zero()) continue;
    tw.push_back(-g.degree(F));
    cols.push_back(g);
  }
  if (nu == 0 || static_cast<int>(cols.size()) == nu) return SubmoduleBasis<K>(F, {}, true);
  GradedMap<K> phi(R, FreeModule(tw), F, cols);
  auto ker = kernel_of_map(phi, quotient, opt);
  GradedMap<K> u(R, FreeModule(std::vector<int>(tw.begin(), tw.begin() + nu)), F, ucols);
  std::vector<Vec<K>> out;
  for (auto& v : ker.gens) {
    Vec<K> w = u.apply(v.slice(0, nu));
    if (!w.is_zero()) out.push_back(std::move(w));
  }
  return groebner(SubmoduleBasis<K>(F, std::move(out)), quotient, opt);
}

template <class K>
bool same_submodule(const SubmoduleBasis<K>& a, const SubmoduleBasis<K>& b,
                    const std::vector<Poly<K>>& quotient = {}) {
  auto ga = groebner(a, quotient);
  auto gb = groebner(b, quotient);
  return contains_all(ga, b) && contains_all(gb, a);
}

namespace detail {

inline Monomial swap_vars(const Monomial& m, int i, int j) {
  Monomial r = m;
  r.set(i, m[j]);
  r.set(j, m[i]);
  return r;
}

template <class K>
Poly<K> swap_vars(const Poly<K>& p, int i, int j) {
  std::vector<Term<K>> t;
  for (auto& x : p.terms()) t.push_back({swap_vars(x.m, i, j), x.c});
  return Poly<K>::from_terms(std::move(t));
}

// Ideal saturation I : x_i^∞ via a grevlex basis with x_i placed last.
template <class K>
std::vector<Poly<K>> saturate_ideal_by_variable(const std::vector<Poly<K>>& I, int i, int nvars,
                                                const GroebnerOptions& opt) {
  const int last = nvars - 1;
  std::vector<Poly<K>> sw;
  for (auto& f : I) sw.push_back(swap_vars(f, i, last));
  auto gb = groebner_ideal(sw, opt);
  std::vector<Poly<K>> out;
  for (auto& g : gb) {
    int e = 60000;
    for (auto& t : g.terms()) e = std::min(e, t.m[last]);
    Poly<K> h = g;
    if (e > 0) {
      std::vector<Term<K>> t;
      for (auto& x : g.terms()) {
        Monomial m = x.m;
        m.set(last, m[last] - e);
        t.push_back({m, x.c});
      }
      h = Poly<K>::from_terms(std::move(t));
    }
    out.push_back(swap_vars(h, i, last));
  }
  return groebner_ideal(out, opt);
}

template <class K>
int single_variable_index(const Poly<K>& g) {
  if (g.size() != 1 || g.lead_monomial().degree() != 1) return -1;
  for (int i = 0; i < kMaxVars; ++i)
    if (g.lead_monomial()[i] == 1) return i;
  return -1;
}

}  // namespace detail

// M : g^∞ over S/I, by iterated colon until stable.
template <class K>
SubmoduleBasis<K> saturate_by(const RingPtr<K>& R, const SubmoduleBasis<K>& M, const Poly<K>& g,
                              const std::vector<Poly<K>>& quotient = {}, const GroebnerOptions& opt = {}) {
  if (g.is_zero()) throw InputError("saturation by the zero polynomial");
  if (g.is_constant()) return groebner(M, quotient, opt);
  if (M.module.rank() == 1 && M.module.twist(0) == 0) {
    int v = detail::single_variable_index(g);
    if (v >= 0) {
      std::vector<Poly<K>> I = ideal_polys(M);
      I.insert(I.end(), quotient.begin(), quotient.end());
      return ideal_basis(detail::saturate_ideal_by_variable(I, v, R->nvars(), opt));
    }
  }
  SubmoduleBasis<K> cur = groebner(M, quotient, opt);
  for (int step = 0;; ++step) {
    if (step > opt.degree_cap) throw CapExceeded("saturation did not stabilize within the cap");
    SubmoduleBasis<K> next = colon(R, cur, g, quotient, opt);
    if (contains_all(cur, next)) return cur;
    cur = std::move(next);
  }
}

// M : J^∞ = ∩_g (M : g^∞) over the generators g of J.
template <class K>
SubmoduleBasis<K> saturate(const RingPtr<K>& R, const SubmoduleBasis<K>& M, const std::vector<Poly<K>>& J,
                           const std::vector<Poly<K>>& quotient = {}, const GroebnerOptions& opt = {}) {
  std::vector<Poly<K>> gens;
  for (auto& g : J)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) throw InputError("saturation by the zero ideal");
  for (auto& g : gens)
    if (g.is_constant()) return groebner(M, quotient, opt);
  SubmoduleBasis<K> acc;
  bool first = true;
  for (auto& g : gens) {
    SubmoduleBasis<K> s = saturate_by(R, M, g, quotient, opt);
    acc = first ? s : intersect(R, acc, s, quotient, opt);
    first = false;
  }
  return acc;
}

template <class K>
std::vector<Poly<K>> irrelevant_ideal(const PolyRing<K>& R) {
  std::vector<Poly<K>> m;
  for (int i = 0; i < R.nvars(); ++i) m.push_back(R.var(i));
  return m;
}

// Ideal-level conveniences.
template <class K>
std::vector<Poly<K>> saturate_ideal(const RingPtr<K>& R, const std::vector<Poly<K>>& I,
                                    const std::vector<Poly<K>>& J, const GroebnerOptions& opt = {}) {
  return ideal_polys(saturate(R, ideal_basis(I), J, {}, opt));
}

template <class K>
std::vector<Poly<K>> colon_ideal(const RingPtr<K>& R, const std::vector<Poly<K>>& I, const Poly<K>& f,
                                 const GroebnerOptions& opt = {}) {
  return ideal_polys(colon(R, ideal_basis(I), f, {}, opt));
}

template <class K>
std::vector<Poly<K>> intersect_ideals(const RingPtr<K>& R, const std::vector<Poly<K>>& I,
                                      const std::vector<Poly<K>>& J, const GroebnerOptions& opt = {}) {
  return ideal_polys(intersect(R, ideal_basis(I), ideal_basis(J), {}, opt));
}

}  // namespace netlog
