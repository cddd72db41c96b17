#pragma once

#include <map>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/module.hpp"

namespace netlog {

// Minimal graded free resolution over the polynomial ring S:
//   0 <- M <- F0 <- F1 <- ... with maps[i] : F_{i+1} -> F_i.
template <class K>
struct FreeResolution {
  RingPtr<K> ring;
  FreeModule F0;
  std::vector<GradedMap<K>> maps;

  int length() const { return static_cast<int>(maps.size()); }
  const FreeModule& free(int i) const { return i == 0 ? F0 : maps.at(i - 1).source; }

  // betti[i][j] = number of degree-j generators of F_i.
  std::vector<std::map<int, int>> betti() const {
    std::vector<std::map<int, int>> b(maps.size() + 1);
    for (int i = 0; i <= length(); ++i)
      for (int t : free(i).twists) ++b[i][-t];
    return b;
  }
};

// M viewed as an S-module (its quotient ideal becomes part of the relations).
template <class K>
FreeResolution<K> resolve(const PresentedModule<K>& M, const GroebnerOptions& opt = {}) {
  auto P = M.pruned(opt);
  FreeResolution<K> res;
  res.ring = P.ring();
  res.F0 = P.ambient();
  std::vector<Vec<K>> rels = P.relations();
  auto im = detail::ideal_multiples(P.ideal(), P.ambient().rank());
  rels.insert(rels.end(), im.begin(), im.end());
  auto keep = detail::minimal_modulo<K>(P.ambient(), rels, {}, opt);
  std::vector<Vec<K>> cols;
  std::vector<int> tw;
  for (auto k : keep) {
    cols.push_back(rels[k]);
    tw.push_back(-rels[k].degree(P.ambient()));
  }
  if (cols.empty()) return res;
  GradedMap<K> d(P.ring(), FreeModule(tw), P.ambient(), cols);
  const int cap = P.ring()->nvars() + 2;
  for (;;) {
    res.maps.push_back(d);
    if (res.length() > cap) throw CapExceeded("free resolution longer than the syzygy theorem allows");
    auto ker = kernel_of_map(d);
    if (ker.is_zero()) break;
    auto mg = minimal_generators(ker, {}, opt);
    std::vector<int> t2;
    for (auto& v : mg.gens) t2.push_back(-v.degree(d.source));
    d = GradedMap<K>(P.ring(), FreeModule(t2), d.source, mg.gens);
  }
  return res;
}

inline mpz_class free_dim(const FreeModule& F, int nvars, int t) {
  mpz_class s = 0;
  for (int tw : F.twists) s += binomial(t + tw + nvars - 1, nvars - 1);
  return s;
}

// Sheaf cohomology of the sheaf associated to M on Proj S, by graded local
// duality from a free resolution over S.
template <class K>
class Cohomology {
 public:
  explicit Cohomology(const PresentedModule<K>& M, const GroebnerOptions& opt = {})
      : M_(M), res_(resolve(M, opt)), hs_(M.hilbert_series()) {
    for (auto& d : res_.maps) duals_.push_back(d.transpose());
  }

  const FreeResolution<K>& resolution() const { return res_; }

  // dim_k Ext^j_S(M, S)_e.
  mpz_class ext_dim(int j, int e) const {
    const int n = M_.nvars();
    if (j < 0 || j > res_.length()) return 0;
    mpz_class dim = free_dim(res_.free(j).dual(), n, e);
    if (dim == 0) return 0;
    // d_{j+1}^T : F_j* -> F_{j+1}*,  d_j^T : F_{j-1}* -> F_j*
    if (j < res_.length()) dim -= macaulay_map_rank(duals_[j], {}, e);
    if (j >= 1) dim -= macaulay_map_rank(duals_[j - 1], {}, e);
    return dim;
  }

  // h^i(M~(t)).
  mpz_class h(int i, int t) const {
    const int N = M_.nvars() - 1;
    const int e = -t - N - 1;
    if (i < 0 || i > N) return 0;
    if (i == 0) return hs_.value(t) - ext_dim(N + 1, e) + ext_dim(N, e);
    return ext_dim(N - i, e);
  }

  // Euler characteristic from the cohomology table.
  mpz_class chi(int t) const {
    mpz_class s = 0;
    for (int i = 0; i <= M_.nvars() - 1; ++i) s += (i % 2 ? -1 : 1) * h(i, t);
    return s;
  }

 private:
  PresentedModule<K> M_;
  FreeResolution<K> res_;
  HilbertSeries hs_;
  std::vector<GradedMap<K>> duals_;
};

template <class K>
mpz_class h0(const PresentedModule<K>& M, int t) {
  return Cohomology<K>(M).h(0, t);
}

template <class K>
mpz_class sheaf_cohomology(const PresentedModule<K>& M, int i, int t) {
  return Cohomology<K>(M).h(i, t);
}

}  // namespace netlog
