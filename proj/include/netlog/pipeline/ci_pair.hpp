#pragma once

#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/fitting.hpp"
#include "netlog/groebner.hpp"

namespace netlog {

// Affine Krull dimension of S/J.
template <class K>
int krull_dimension(const PolyRing<K>& R, const std::vector<Poly<K>>& J, const GroebnerOptions& opt = {}) {
  return ideal_quotient_series(R, J, opt).dimension();
}

template <class K>
std::vector<std::vector<Poly<K>>> jacobian_rows(const std::vector<Poly<K>>& fs, int nvars) {
  std::vector<std::vector<Poly<K>>> rows;
  for (auto& f : fs) {
    std::vector<Poly<K>> row;
    for (int i = 0; i < nvars; ++i) row.push_back(partial_derivative(f, i));
    rows.push_back(std::move(row));
  }
  return rows;
}

// X = V(F_1..F_r) and Y = V(G_1..G_s) in P^N, D = X ∩ Y.
template <class K>
struct CIPair {
  RingPtr<K> ring;
  std::vector<Poly<K>> F, G;

  int N() const { return ring->nvars() - 1; }
  int r() const { return static_cast<int>(F.size()); }
  int s() const { return static_cast<int>(G.size()); }
  std::vector<Poly<K>> D_ideal() const {
    auto d = F;
    d.insert(d.end(), G.begin(), G.end());
    return d;
  }
};

template <class K>
CIPair<K> make_ci_pair(RingPtr<K> R, std::vector<Poly<K>> F, std::vector<Poly<K>> G,
                       const GroebnerOptions& opt = {}) {
  CIPair<K> P{std::move(R), std::move(F), std::move(G)};
  const PolyRing<K>& S = *P.ring;
  const int n = S.nvars();
  if (P.F.empty()) throw InputError("X must be cut out by at least one form (the case X = P^N is not supported)");
  for (auto* list : {&P.F, &P.G})
    for (auto& f : *list) {
      if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
        throw CheckFailed("homogeneous", "every defining form must be a nonzero homogeneous form of positive degree");
    }
  if (krull_dimension(S, P.F, opt) != n - P.r())
    throw CheckFailed("complete intersection X", "V(F) does not have codimension " + std::to_string(P.r()));
  if (n - P.r() < 2) throw CheckFailed("dimension", "X must have positive dimension");
  auto sing = P.F;
  for (auto& m : minors(jacobian_rows(P.F, n), P.r())) sing.push_back(m);
  if (krull_dimension(S, sing, opt) != 0) throw CheckFailed("smooth X", "the Jacobian ideal of X is not irrelevant");
  if (krull_dimension(S, P.D_ideal(), opt) != n - P.r() - P.s())
    throw CheckFailed("complete intersection X∩Y",
                      "X∩Y does not have codimension " + std::to_string(P.r() + P.s()));
  if (P.s() > 0 && n - P.r() - P.s() < 1) throw CheckFailed("complete intersection X∩Y", "X∩Y is empty");
  return P;
}

// ξ : O(1)^{N+1} -> ⊕O(f_i) ⊕ ⊕O(g_j), rows ∇F_i then ∇G_j.
template <class K>
GradedMap<K> jacobian_map(const CIPair<K>& P) {
  std::vector<int> tw;
  for (auto& f : P.F) tw.push_back(f.degree());
  for (auto& g : P.G) tw.push_back(g.degree());
  return GradedMap<K>::from_rows(P.ring, FreeModule::uniform(P.N() + 1, 1), FreeModule(tw),
                                 jacobian_rows(P.D_ideal(), P.N() + 1));
}

// Ideal of Sing(D), unsaturated.
template <class K>
std::vector<Poly<K>> singular_locus_ideal(const CIPair<K>& P) {
  auto D = P.D_ideal();
  auto sing = D;
  for (auto& m : minors(jacobian_rows(D, P.N() + 1), P.r() + P.s())) sing.push_back(m);
  return sing;
}

// D reduced: its singular locus has codimension at least one in D.
template <class K>
bool is_reduced_section(const CIPair<K>& P, const GroebnerOptions& opt = {}) {
  return krull_dimension(*P.ring, singular_locus_ideal(P), opt) < krull_dimension(*P.ring, P.D_ideal(), opt);
}

}  // namespace netlog
