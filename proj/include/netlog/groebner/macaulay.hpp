#pragma once

#include <unordered_map>
#include <vector>

#include "netlog/groebner/graded_map.hpp"
#include "netlog/groebner/linear_algebra.hpp"
#include "netlog/groebner/module_vector.hpp"

namespace netlog {

// Coordinates of the degree-t part of a free module: one column per
// (component, monomial) pair. This is the brute-force linear-algebra view
// used as an oracle against the Groebner engine.
template <class K>
class DegreeSlice {
 public:
  DegreeSlice(const PolyRing<K>& R, const FreeModule& F, int t) : R_(R), F_(F), t_(t) {
    index_.resize(F.rank());
    int col = 0;
    for (int k = 0; k < F.rank(); ++k)
      for (auto& m : R.monomials_of_degree(t + F.twist(k))) index_[k].emplace(m, col++);
    dim_ = col;
  }

  int dim() const { return dim_; }
  int degree() const { return t_; }

  SparseRow<K> row(const Vec<K>& v) const {
    SparseRow<K> r;
    for (auto& tm : v.terms()) {
      auto it = index_[tm.comp].find(tm.m);
      if (it == index_[tm.comp].end()) throw InputError("vector not homogeneous of the slice degree");
      r.push_back({it->second, tm.c});
    }
    std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return r;
  }

  // Echelon form of the degree-t part of the submodule generated by `gens`
  // and by I·F for the quotient ideal I.
  SparseEchelon<K> span(const std::vector<Vec<K>>& gens, const std::vector<Poly<K>>& quotient = {}) const {
    SparseEchelon<K> E;
    auto add_multiples = [&](const Vec<K>& g) {
      if (g.is_zero()) return;
      int d = g.degree(F_);
      if (d > t_) return;
      for (auto& mu : R_.monomials_of_degree(t_ - d)) E.insert(row(g.mul_term(mu, R_.scalar(1))));
    };
    for (auto& f : quotient)
      for (int k = 0; k < F_.rank(); ++k) add_multiples(Vec<K>::from_poly(f, k));
    for (auto& g : gens) add_multiples(g);
    return E;
  }

 private:
  const PolyRing<K>& R_;
  FreeModule F_;
  int t_;
  int dim_ = 0;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index_;
};

// dim_k (F / (U + I·F))_t by Macaulay-matrix rank.
template <class K>
long macaulay_hf(const PolyRing<K>& R, const FreeModule& F, const std::vector<Vec<K>>& gens,
                 const std::vector<Poly<K>>& quotient, int t) {
  DegreeSlice<K> S(R, F, t);
  return S.dim() - S.span(gens, quotient).rank();
}

// Membership of a homogeneous vector in U + I·F, decided in its own degree.
template <class K>
bool macaulay_member(const PolyRing<K>& R, const FreeModule& F, const std::vector<Vec<K>>& gens,
                     const std::vector<Poly<K>>& quotient, const Vec<K>& v) {
  if (v.is_zero()) return true;
  DegreeSlice<K> S(R, F, v.degree(F));
  return S.span(gens, quotient).in_span(S.row(v));
}

// rank of phi: (F1)_t -> (F0/I F0)_t.
template <class K>
long macaulay_map_rank(const GradedMap<K>& phi, const std::vector<Poly<K>>& quotient, int t) {
  DegreeSlice<K> S(*phi.ring, phi.target, t);
  long with = S.span(phi.columns, quotient).rank();
  long without = quotient.empty() ? 0 : S.span({}, quotient).rank();
  return with - without;
}

// dim of the kernel of phi in degree t over S/I.
template <class K>
long macaulay_kernel_dim(const GradedMap<K>& phi, const std::vector<Poly<K>>& quotient, int t) {
  long src = macaulay_hf(*phi.ring, phi.source, {}, quotient, t);
  return src - macaulay_map_rank(phi, quotient, t);
}

}  // namespace netlog
