#pragma once

#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/module.hpp"

namespace netlog {

namespace detail {

template <class K>
void require_integral(const PresentedModule<K>& M, const char* op) {
  if (!M.integral())
    throw InputError(std::string(op) + ": the ambient ring is declared non-integral (reducible), refusing");
}

// Minimal generators of ker(phi) over S/I, as columns of a map into phi.source.
template <class K>
GradedMap<K> kernel_generators(const GradedMap<K>& phi, const std::vector<Poly<K>>& I, const GroebnerOptions& opt) {
  auto ker = kernel_of_map(phi, I, opt);
  auto keep = minimal_modulo(phi.source, ker.gens, ideal_multiples(I, phi.source.rank()), opt);
  std::vector<Vec<K>> cols;
  std::vector<int> tw;
  for (auto k : keep) {
    cols.push_back(ker.gens[k]);
    tw.push_back(-ker.gens[k].degree(phi.source));
  }
  return GradedMap<K>(phi.ring, FreeModule(tw), phi.source, std::move(cols));
}

}  // namespace detail

// Hom_R(M, R) as the submodule ker(φ^T) of F0* (twists negated), R = S/I.
template <class K>
PresentedModule<K> hom_dual(const PresentedModule<K>& M, const GroebnerOptions& opt = {}) {
  auto P = M.presentation(opt);
  auto phiT = P.relation_map().transpose();
  auto K0 = detail::kernel_generators(phiT, P.ideal(), opt);
  return PresentedModule<K>::image(P.ring(), P.ambient().dual(), K0.columns, P.ideal(), P.integral());
}

// The natural map M -> M** and everything derived from it. With
// M = coker(φ : F1 -> F0), M* = im(K : G -> F0*) where K generates ker φ^T,
// and M* = coker(ψ : P -> G). Then
//   ν = K^T : F0 -> G*,  M** = ker ψ^T ⊆ G*,  image(M -> M**) = im ν,
//   torsion = ker ν / W.
template <class K>
struct DualityData {
  PresentedModule<K> module;  // cokernel presentation of M
  GradedMap<K> kmap;          // K : G -> F0*
  GradedMap<K> nu;            // F0 -> G*
  PresentedModule<K> dual;
  PresentedModule<K> double_dual;
  PresentedModule<K> torsion_free;
  PresentedModule<K> torsion;
};

template <class K>
DualityData<K> duality_data(const PresentedModule<K>& M, const GroebnerOptions& opt = {}) {
  detail::require_integral(M, "double dual / torsion");
  DualityData<K> D;
  D.module = M.presentation(opt);
  const auto& I = D.module.ideal();
  const bool in = D.module.integral();
  auto phiT = D.module.relation_map().transpose();
  D.kmap = detail::kernel_generators(phiT, I, opt);
  D.nu = D.kmap.transpose();
  D.dual = PresentedModule<K>::image(D.module.ring(), D.kmap.target, D.kmap.columns, I, in);
  FreeModule Gs = D.kmap.source.dual();
  if (D.kmap.source.rank() == 0) {
    D.double_dual = PresentedModule<K>::image(D.module.ring(), Gs, {}, I, in);
  } else {
    auto psi = detail::kernel_generators(D.kmap, I, opt);
    if (psi.source.rank() == 0) {
      D.double_dual = PresentedModule<K>::free(D.module.ring(), Gs, I, in);
    } else {
      auto psiT = psi.transpose();
      auto dd = detail::kernel_generators(psiT, I, opt);
      D.double_dual = PresentedModule<K>::image(D.module.ring(), Gs, dd.columns, I, in);
    }
  }
  D.torsion_free = PresentedModule<K>::image(D.module.ring(), Gs, D.nu.columns, I, in);
  auto tk = kernel_of_map(D.nu, I, opt);
  D.torsion = PresentedModule<K>::subquotient(D.module.ring(), D.module.ambient(), tk.gens, D.module.relations(),
                                              I, in);
  return D;
}

template <class K>
PresentedModule<K> double_dual(const PresentedModule<K>& M, const GroebnerOptions& opt = {}) {
  return duality_data(M, opt).double_dual;
}
template <class K>
PresentedModule<K> torsion_submodule(const PresentedModule<K>& M, const GroebnerOptions& opt = {}) {
  return duality_data(M, opt).torsion;
}
template <class K>
PresentedModule<K> torsion_free_quotient(const PresentedModule<K>& M, const GroebnerOptions& opt = {}) {
  return duality_data(M, opt).torsion_free;
}

// Tor_i^S(M, S/J) as a module over S/J.
template <class K>
PresentedModule<K> tor(const PresentedModule<K>& M, const std::vector<Poly<K>>& J, int i,
                       const GroebnerOptions& opt = {}) {
  if (i < 0) throw InputError("Tor index must be non-negative");
  if (i == 0) return M.restrict(J, false, opt);
  auto P = M.pruned(opt);
  // Resolve M as an S-module far enough to see F_{i+1} -> F_i -> F_{i-1}.
  std::vector<Vec<K>> rels = P.relations();
  auto im = detail::ideal_multiples(P.ideal(), P.ambient().rank());
  rels.insert(rels.end(), im.begin(), im.end());
  std::vector<int> tw;
  for (auto& w : rels) tw.push_back(-w.degree(P.ambient()));
  GradedMap<K> d(P.ring(), FreeModule(tw), P.ambient(), rels);
  for (int k = 1; k < i; ++k) d = detail::kernel_generators(d, {}, opt);
  if (d.source.rank() == 0) return PresentedModule<K>::free(P.ring(), FreeModule(), J, false);
  auto next = detail::kernel_generators(d, {}, opt);
  auto kj = kernel_of_map(d, J, opt);
  return PresentedModule<K>::subquotient(P.ring(), d.source, kj.gens, next.columns, J, false);
}

}  // namespace netlog
