#pragma once

#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/duality.hpp"
#include "netlog/graded/module.hpp"
#include "netlog/pipeline/ci_pair.hpp"

namespace netlog {

template <class K>
Vec<K> euler_vector(const PolyRing<K>& R) {
  std::vector<Poly<K>> c;
  for (int i = 0; i < R.nvars(); ++i) c.push_back(R.var(i));
  return Vec<K>::from_components(c);
}

// ker ξ over S, as vectors in O(1)^{N+1}.
template <class K>
std::vector<Vec<K>> ambient_log_kernel(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  return detail::kernel_generators(jacobian_map(P), {}, opt).columns;
}

// Image of T_{X∩Y} ⊗ O_X in O_X(1)^{N+1}.
template <class K>
PresentedModule<K> net_log_tangent(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  return PresentedModule<K>::image(P.ring, FreeModule::uniform(P.N() + 1, 1), ambient_log_kernel(P, opt), P.F,
                                   true);
}

// T_{X∩Y} ⊗ O_X before the torsion is divided out.
template <class K>
PresentedModule<K> restricted_log_kernel(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  auto A = PresentedModule<K>::image(P.ring, FreeModule::uniform(P.N() + 1, 1), ambient_log_kernel(P, opt));
  return A.restrict(P.F, true, opt);
}

// B = coker ξ over S.
template <class K>
PresentedModule<K> jacobian_cokernel(const CIPair<K>& P) {
  return PresentedModule<K>::cokernel(jacobian_map(P));
}

// Tor_1(B, O_X): the defect between the net sheaf and its reflexive hull.
template <class K>
PresentedModule<K> tor_defect(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  return tor(jacobian_cokernel(P), P.F, 1, opt);
}

template <class K>
void require_reduced(const CIPair<K>& P, const GroebnerOptions& opt) {
  if (!is_reduced_section(P, opt))
    throw CheckFailed("reduced D", "X∩Y is not reduced; the reflexive-hull identity needs a reduced effective divisor");
}

template <class K>
PresentedModule<K> reflexive_log_tangent(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  require_reduced(P, opt);
  return double_dual(net_log_tangent(P, opt), opt);
}

// ker(ξ ⊗ O_X) in O_X(1)^{N+1}: vector fields on X tangent to D.
template <class K>
PresentedModule<K> log_vector_fields(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  auto k = detail::kernel_generators(jacobian_map(P), P.F, opt);
  return PresentedModule<K>::image(P.ring, FreeModule::uniform(P.N() + 1, 1), k.columns, P.F, true);
}

// Generators of ker(∇F ⊗ O_X) in O_X(1)^{N+1}; dividing by Euler gives T_X.
template <class K>
std::vector<Vec<K>> tangent_lift(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  std::vector<int> tw;
  for (auto& f : P.F) tw.push_back(f.degree());
  GradedMap<K> dF = GradedMap<K>::from_rows(P.ring, FreeModule::uniform(P.N() + 1, 1), FreeModule(tw),
                                            jacobian_rows(P.F, P.N() + 1));
  return detail::kernel_generators(dF, P.F, opt).columns;
}

template <class K>
PresentedModule<K> tangent_sheaf(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  return PresentedModule<K>::subquotient(P.ring, FreeModule::uniform(P.N() + 1, 1), tangent_lift(P, opt),
                                         {euler_vector(*P.ring)}, P.F, true);
}

template <class K>
struct ResidueData {
  PresentedModule<K> tangent;     // T_X
  PresentedModule<K> normal;      // N_{X,Y} = coker(T_X(Y) -> T_X)
  PresentedModule<K> jacobian;    // J_D(D) = coker(T_X(-log D) -> T_X)
  PresentedModule<K> log_fields;  // T_X(-log D) as ker(ξ ⊗ O_X)
};

template <class K>
ResidueData<K> residue_data(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  if (P.r() != 1 || P.s() != 1) throw InputError("residue cokernels are implemented for hypersurface pairs only");
  FreeModule F = FreeModule::uniform(P.N() + 1, 1);
  auto gens = tangent_lift(P, opt);
  std::vector<Vec<K>> euler{euler_vector(*P.ring)};
  ResidueData<K> out;
  out.tangent = PresentedModule<K>::subquotient(P.ring, F, gens, euler, P.F, true);
  auto rels = euler;
  for (auto& v : ambient_log_kernel(P, opt)) rels.push_back(v);
  out.normal = PresentedModule<K>::subquotient(P.ring, F, gens, rels, P.F, false);
  out.log_fields = log_vector_fields(P, opt);
  rels = euler;
  for (auto& v : *out.log_fields.explicit_generators()) rels.push_back(v);
  out.jacobian = PresentedModule<K>::subquotient(P.ring, F, gens, rels, P.F, false);
  return out;
}

template <class K>
PresentedModule<K> residue_cokernel(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  return residue_data(P, opt).normal;
}

}  // namespace netlog
