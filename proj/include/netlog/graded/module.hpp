#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/hilbert.hpp"
#include "netlog/groebner.hpp"

namespace netlog {

namespace detail {

// Indices into `gens` of a minimal generating set of (gens + background)
// modulo the background submodule.
template <class K>
std::vector<std::size_t> minimal_modulo(const FreeModule& F, const std::vector<Vec<K>>& gens,
                                        const std::vector<Vec<K>>& background, const GroebnerOptions& opt) {
  std::vector<Vec<K>> all = background;
  all.insert(all.end(), gens.begin(), gens.end());
  BuchbergerEngine<K> eng(F, opt);
  eng.run(all, background.size());
  std::vector<std::size_t> out;
  for (std::size_t k : eng.minimal()) out.push_back(k - background.size());
  std::sort(out.begin(), out.end());
  return out;
}

template <class K>
std::vector<Vec<K>> ideal_multiples(const std::vector<Poly<K>>& I, int rank) {
  std::vector<Vec<K>> out;
  for (auto& f : I)
    for (int k = 0; k < rank; ++k)
      if (!f.is_zero()) out.push_back(Vec<K>::from_poly(f, k));
  return out;
}

template <class K>
std::vector<Vec<K>> nonzero(const std::vector<Vec<K>>& v) {
  std::vector<Vec<K>> out;
  for (auto& x : v)
    if (!x.is_zero()) out.push_back(x);
  return out;
}

template <class K>
Vec<K> embed(const Vec<K>& v, int offset) {
  std::vector<VTerm<K>> t;
  for (auto& x : v.terms()) t.push_back({x.comp + offset, x.m, x.c});
  return Vec<K>::from_terms(std::move(t));
}

}  // namespace detail

// Graded module over R = S/I given as a subquotient of a free module F:
//   M = (U + W + I·F) / (W + I·F).
// When U is absent the module is the cokernel F / (W + I·F).
template <class K>
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(RingPtr<K> R, FreeModule F, std::optional<std::vector<Vec<K>>> gens, std::vector<Vec<K>> rels,
                  std::vector<Poly<K>> ideal = {}, bool integral = true)
      : R_(std::move(R)),
        F_(std::move(F)),
        gens_(std::move(gens)),
        rels_(detail::nonzero(rels)),
        ideal_(std::move(ideal)),
        integral_(integral),
        cache_(std::make_shared<Cache>()) {
    for (auto& f : ideal_)
      if (!f.is_homogeneous()) throw InputError("module ideal has an inhomogeneous generator");
    auto check = [&](const Vec<K>& v, const char* what) {
      if (!v.is_homogeneous(F_)) throw InputError(std::string("inhomogeneous ") + what + " vector");
      for (auto& t : v.terms())
        if (t.comp >= F_.rank()) throw InputError(std::string(what) + " vector outside the ambient module");
    };
    for (auto& v : rels_) check(v, "relation");
    if (gens_) {
      *gens_ = detail::nonzero(*gens_);
      for (auto& v : *gens_) check(v, "generator");
    }
  }

  static PresentedModule free(RingPtr<K> R, FreeModule F, std::vector<Poly<K>> ideal = {}, bool integral = true) {
    return PresentedModule(std::move(R), std::move(F), std::nullopt, {}, std::move(ideal), integral);
  }
  static PresentedModule cokernel(const GradedMap<K>& phi, std::vector<Poly<K>> ideal = {}, bool integral = true) {
    return PresentedModule(phi.ring, phi.target, std::nullopt, phi.columns, std::move(ideal), integral);
  }
  static PresentedModule image(RingPtr<K> R, FreeModule F, std::vector<Vec<K>> gens, std::vector<Poly<K>> ideal = {},
                               bool integral = true) {
    return PresentedModule(std::move(R), std::move(F), std::move(gens), {}, std::move(ideal), integral);
  }
  static PresentedModule subquotient(RingPtr<K> R, FreeModule F, std::vector<Vec<K>> gens, std::vector<Vec<K>> rels,
                                     std::vector<Poly<K>> ideal = {}, bool integral = true) {
    return PresentedModule(std::move(R), std::move(F), std::move(gens), std::move(rels), std::move(ideal), integral);
  }

  const RingPtr<K>& ring() const { return R_; }
  const FreeModule& ambient() const { return F_; }
  bool is_cokernel() const { return !gens_.has_value(); }
  const std::vector<Vec<K>>& relations() const { return rels_; }
  const std::vector<Poly<K>>& ideal() const { return ideal_; }
  bool integral() const { return integral_; }
  int nvars() const { return R_->nvars(); }

  // U, or the unit vectors of F for a cokernel.
  std::vector<Vec<K>> generators() const {
    if (gens_) return *gens_;
    std::vector<Vec<K>> u;
    for (int k = 0; k < F_.rank(); ++k) u.push_back(Vec<K>::unit(k, R_->scalar(1)));
    return u;
  }
  const std::optional<std::vector<Vec<K>>>& explicit_generators() const { return gens_; }

  // Groebner basis of W + I·F.
  const SubmoduleBasis<K>& relation_basis() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->rel) cache_->rel = groebner(SubmoduleBasis<K>(F_, rels_), ideal_);
    return *cache_->rel;
  }
  // Groebner basis of U + W + I·F (null for a cokernel, where it is all of F).
  const SubmoduleBasis<K>* total_basis() const {
    if (!gens_) return nullptr;
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->total) {
      std::vector<Vec<K>> all = rels_;
      all.insert(all.end(), gens_->begin(), gens_->end());
      cache_->total = groebner(SubmoduleBasis<K>(F_, all), ideal_);
    }
    return &*cache_->total;
  }

  HilbertSeries hilbert_series() const {
    HilbertSeries h = hilbert_series_of_quotient(relation_basis(), nvars());
    if (auto* tb = total_basis()) h -= hilbert_series_of_quotient(*tb, nvars());
    return h;
  }
  mpz_class hf(int t) const { return hilbert_series().value(t); }
  UPoly hilbert_polynomial() const { return hilbert_series().polynomial(); }
  HilbertData hilbert(int lo, int hi) const { return hilbert_data(hilbert_series(), lo, hi); }
  bool is_zero() const { return hilbert_series().numerator.is_zero(); }

  PresentedModule twist(int s) const {
    return PresentedModule(R_, F_.shifted(s), gens_, rels_, ideal_, integral_);
  }
  PresentedModule with_ideal(std::vector<Poly<K>> ideal, bool integral) const {
    return PresentedModule(R_, F_, gens_, rels_, std::move(ideal), integral);
  }

  // Isomorphic cokernel presentation F' / (W' + I·F') on a minimal set of the
  // generators U.
  PresentedModule presentation(const GroebnerOptions& opt = {}) const {
    if (!gens_) return *this;
    std::vector<Vec<K>> bg = rels_;
    auto im = detail::ideal_multiples(ideal_, F_.rank());
    bg.insert(bg.end(), im.begin(), im.end());
    auto keep = detail::minimal_modulo(F_, *gens_, bg, opt);
    std::vector<Vec<K>> cols;
    std::vector<int> tw;
    for (auto k : keep) {
      cols.push_back((*gens_)[k]);
      tw.push_back(-(*gens_)[k].degree(F_));
    }
    const int g = static_cast<int>(cols.size());
    for (auto& w : rels_) {
      cols.push_back(w);
      tw.push_back(-w.degree(F_));
    }
    GradedMap<K> phi(R_, FreeModule(tw), F_, cols);
    auto ker = kernel_of_map(phi, ideal_, opt);
    std::vector<Vec<K>> rel;
    for (auto& v : ker.gens) {
      Vec<K> p = v.slice(0, g);
      if (!p.is_zero()) rel.push_back(std::move(p));
    }
    FreeModule G(std::vector<int>(tw.begin(), tw.begin() + g));
    auto mk = detail::minimal_modulo(G, rel, detail::ideal_multiples(ideal_, g), opt);
    std::vector<Vec<K>> mrel;
    for (auto k : mk) mrel.push_back(rel[k]);
    return PresentedModule(R_, G, std::nullopt, std::move(mrel), ideal_, integral_);
  }

  // Cokernel presentation with minimal relations and no unit entries.
  PresentedModule pruned(const GroebnerOptions& opt = {}) const {
    PresentedModule P = presentation(opt);
    std::vector<int> tw = P.F_.twists;
    std::vector<std::vector<Poly<K>>> cols;
    {
      auto keep = detail::minimal_modulo(P.F_, P.rels_, detail::ideal_multiples(ideal_, P.F_.rank()), opt);
      for (auto k : keep) cols.push_back(P.rels_[k].components(P.F_.rank()));
    }
    for (bool again = true; again;) {
      again = false;
      for (std::size_t j = 0; j < cols.size() && !again; ++j)
        for (std::size_t i = 0; i < tw.size() && !again; ++i) {
          const Poly<K>& e = cols[j][i];
          if (e.is_zero() || !e.is_constant()) continue;
          K c = e.lead_coeff();
          std::vector<Poly<K>> pivot = cols[j];
          std::vector<std::vector<Poly<K>>> next;
          for (std::size_t l = 0; l < cols.size(); ++l) {
            if (l == j) continue;
            std::vector<Poly<K>> col = cols[l];
            if (!col[i].is_zero()) {
              Poly<K> f = col[i].scaled(c.inverse());
              for (std::size_t r = 0; r < tw.size(); ++r) col[r] -= f * pivot[r];
            }
            col.erase(col.begin() + static_cast<long>(i));
            next.push_back(std::move(col));
          }
          tw.erase(tw.begin() + static_cast<long>(i));
          cols = std::move(next);
          again = true;
        }
    }
    std::vector<Vec<K>> rel;
    for (auto& c : cols) {
      Vec<K> v = Vec<K>::from_components(c);
      if (!v.is_zero()) rel.push_back(std::move(v));
    }
    return PresentedModule(R_, FreeModule(tw), std::nullopt, std::move(rel), ideal_, integral_);
  }

  // Presentation map F1 -> F0 of a cokernel module (relations only, I implicit).
  GradedMap<K> relation_map() const {
    if (gens_) throw InputError("relation_map requires a cokernel presentation");
    std::vector<int> tw;
    for (auto& w : rels_) tw.push_back(-w.degree(F_));
    return GradedMap<K>(R_, FreeModule(tw), F_, rels_);
  }

  // M ⊗ S/J, a module over S/(I + J).
  PresentedModule restrict(const std::vector<Poly<K>>& J, bool integral = false,
                           const GroebnerOptions& opt = {}) const {
    PresentedModule P = presentation(opt);
    std::vector<Poly<K>> I = ideal_;
    for (auto& f : J)
      if (!f.is_zero()) I.push_back(f);
    return PresentedModule(R_, P.F_, std::nullopt, P.rels_, std::move(I), integral);
  }

  bool same_ring(const PresentedModule& o) const { return R_->same_as(*o.R_); }

 private:
  struct Cache {
    std::mutex mu;
    std::optional<SubmoduleBasis<K>> rel, total;
  };

  RingPtr<K> R_;
  FreeModule F_;
  std::optional<std::vector<Vec<K>>> gens_;
  std::vector<Vec<K>> rels_;
  std::vector<Poly<K>> ideal_;
  bool integral_ = true;
  std::shared_ptr<Cache> cache_;
};

template <class K>
bool same_ideal(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b) {
  if (a.empty() && b.empty()) return true;
  return same_submodule(ideal_basis(a), ideal_basis(b));
}

template <class K>
PresentedModule<K> direct_sum(const PresentedModule<K>& A, const PresentedModule<K>& B) {
  if (!A.same_ring(B) || !same_ideal(A.ideal(), B.ideal())) throw InputError("direct sum over different rings");
  FreeModule F = FreeModule::direct_sum(A.ambient(), B.ambient());
  const int off = A.ambient().rank();
  std::vector<Vec<K>> rels = A.relations();
  for (auto& w : B.relations()) rels.push_back(detail::embed(w, off));
  if (A.is_cokernel() && B.is_cokernel())
    return PresentedModule<K>(A.ring(), F, std::nullopt, rels, A.ideal(), A.integral() && B.integral());
  std::vector<Vec<K>> gens = A.generators();
  for (auto& u : B.generators()) gens.push_back(detail::embed(u, off));
  return PresentedModule<K>(A.ring(), F, gens, rels, A.ideal(), A.integral() && B.integral());
}

// A ⊗_R B for modules over the same R.
template <class K>
PresentedModule<K> tensor(const PresentedModule<K>& A, const PresentedModule<K>& B, const GroebnerOptions& opt = {}) {
  if (!A.same_ring(B) || !same_ideal(A.ideal(), B.ideal())) throw InputError("tensor over different rings");
  auto P = A.presentation(opt), Q = B.presentation(opt);
  const int a = P.ambient().rank(), b = Q.ambient().rank();
  std::vector<int> tw;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) tw.push_back(P.ambient().twist(i) + Q.ambient().twist(j));
  std::vector<Vec<K>> rels;
  for (auto& w : P.relations())
    for (int j = 0; j < b; ++j) {
      std::vector<VTerm<K>> t;
      for (auto& x : w.terms()) t.push_back({x.comp * b + j, x.m, x.c});
      rels.push_back(Vec<K>::from_terms(std::move(t)));
    }
  for (auto& w : Q.relations())
    for (int i = 0; i < a; ++i) {
      std::vector<VTerm<K>> t;
      for (auto& x : w.terms()) t.push_back({i * b + x.comp, x.m, x.c});
      rels.push_back(Vec<K>::from_terms(std::move(t)));
    }
  return PresentedModule<K>(A.ring(), FreeModule(tw), std::nullopt, rels, A.ideal(), A.integral());
}

// Saturation of the relations by the irrelevant ideal: F / ((W + I·F) : m^∞)
// for a cokernel module.
template <class K>
PresentedModule<K> saturate_relations(const PresentedModule<K>& M, const GroebnerOptions& opt = {}) {
  auto P = M.presentation(opt);
  auto sat = saturate(P.ring(), SubmoduleBasis<K>(P.ambient(), P.relations()), irrelevant_ideal(*P.ring()),
                      P.ideal(), opt);
  return PresentedModule<K>(P.ring(), P.ambient(), std::nullopt, sat.gens, P.ideal(), P.integral());
}

}  // namespace netlog
