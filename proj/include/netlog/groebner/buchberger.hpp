#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/groebner/module_vector.hpp"

namespace netlog {

inline constexpr int kDefaultDegreeCap = 64;
inline constexpr const char* kDegreeCapEnv = "NETLOG_GB_DEGREE_CAP";

inline int default_degree_cap() {
  if (const char* s = std::getenv(kDegreeCapEnv)) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
  }
  return kDefaultDegreeCap;
}

struct GroebnerOptions {
  int degree_cap = default_degree_cap();
};

// Generators of a submodule of a graded free module.
template <class K>
struct SubmoduleBasis {
  FreeModule module;
  std::vector<Vec<K>> gens;
  bool groebner = false;

  SubmoduleBasis() = default;
  SubmoduleBasis(FreeModule F, std::vector<Vec<K>> g, bool gb = false)
      : module(std::move(F)), gens(std::move(g)), groebner(gb) {}

  bool is_zero() const {
    for (auto& g : gens)
      if (!g.is_zero()) return false;
    return true;
  }
};

// Record of one reduction step  h -= c * m * basis[index].
template <class K>
struct Quotient {
  std::size_t index;
  Monomial m;
  K c;
};

// Lead-term lookup grouped by component.
template <class K>
class LeadIndex {
 public:
  void add(std::size_t idx, const Vec<K>& g) {
    int c = g.lead().comp;
    if (c >= static_cast<int>(by_comp_.size())) by_comp_.resize(c + 1);
    by_comp_[c].push_back(idx);
  }
  // First basis element whose lead divides (comp, m), or npos.
  std::size_t find(int comp, const Monomial& m, const std::vector<Vec<K>>& basis) const {
    if (comp >= static_cast<int>(by_comp_.size())) return npos;
    for (std::size_t idx : by_comp_[comp])
      if (basis[idx].lead().m.divides(m)) return idx;
    return npos;
  }
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  std::vector<std::vector<std::size_t>> by_comp_;
};

// Reduce h by `basis`. With `full`, every term is reduced, otherwise only the
// lead. Quotients are appended to `quot` when non-null. Terms before position
// `from` are left alone.
template <class K>
Vec<K> reduce_vec(Vec<K> h, const std::vector<Vec<K>>& basis, const LeadIndex<K>& idx, bool full,
                  std::vector<Quotient<K>>* quot = nullptr, std::size_t from = 0) {
  std::size_t i = from;
  while (i < h.size()) {
    const auto& t = h.terms()[i];
    std::size_t r = idx.find(t.comp, t.m, basis);
    if (r == LeadIndex<K>::npos) {
      if (!full) break;
      ++i;
      continue;
    }
    const auto& g = basis[r];
    Monomial q = t.m / g.lead().m;
    K c = t.c / g.lead().c;
    if (quot) quot->push_back({r, q, c});
    h = Vec<K>::sub_scaled(h, g, q, c);
  }
  return h;
}

namespace detail {

template <class K>
class BuchbergerEngine {
 public:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int comp;
    int degree;
    bool live = true;
  };

  BuchbergerEngine(const FreeModule& F, const GroebnerOptions& opt) : F_(F), opt_(opt) {}

  // gens[0, n_background) are inserted before the others of the same degree
  // and never counted as minimal generators.
  void run(const std::vector<Vec<K>>& gens, std::size_t n_background) {
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].is_zero()) continue;
      if (!gens[k].is_homogeneous(F_)) throw InputError("inhomogeneous generator in Groebner input");
      order.push_back({gens[k].degree(F_), k});
    }
    std::stable_sort(order.begin(), order.end(), [&](auto& a, auto& b) {
      if (a.first != b.first) return a.first < b.first;
      bool ba = a.second < n_background, bb = b.second < n_background;
      if (ba != bb) return ba;
      return a.second < b.second;
    });
    std::size_t next = 0;
    for (;;) {
      int d = std::numeric_limits<int>::max();
      if (next < order.size()) d = order[next].first;
      for (auto& p : pairs_)
        if (p.live) d = std::min(d, p.degree);
      if (d == std::numeric_limits<int>::max()) break;
      if (d > opt_.degree_cap)
        throw CapExceeded("Groebner basis degree cap " + std::to_string(opt_.degree_cap) + " exceeded (degree " +
                          std::to_string(d) + ")");
      process_pairs(d);
      while (next < order.size() && order[next].first == d) {
        std::size_t k = order[next++].second;
        Vec<K> h = reduce_vec(gens[k], basis_, index_, true);
        if (h.is_zero()) continue;
        normalize(h);
        add(std::move(h));
        if (k >= n_background) minimal_.push_back(k);
      }
    }
  }

  std::vector<Vec<K>>& basis() { return basis_; }
  const std::vector<std::size_t>& minimal() const { return minimal_; }

 private:
  void process_pairs(int d) {
    std::vector<std::size_t> sel;
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if (pairs_[k].live && pairs_[k].degree == d) sel.push_back(k);
    std::sort(sel.begin(), sel.end(), [&](std::size_t a, std::size_t b) {
      const Pair& p = pairs_[a];
      const Pair& q = pairs_[b];
      int c = pot_compare(p.comp, p.lcm, q.comp, q.lcm);
      if (c != 0) return c < 0;
      if (p.i != q.i) return p.i < q.i;
      return p.j < q.j;
    });
    std::vector<Pair> todo;
    for (std::size_t k : sel) {
      todo.push_back(pairs_[k]);
      pairs_[k].live = false;
    }
    for (auto& p : todo) {
      Vec<K> h = spoly(basis_[p.i], basis_[p.j], p.lcm);
      h = reduce_vec(std::move(h), basis_, index_, true);
      if (h.is_zero()) continue;
      normalize(h);
      add(std::move(h));
    }
    compact();
  }

  static Vec<K> spoly(const Vec<K>& a, const Vec<K>& b, const Monomial& l) {
    Monomial ma = l / a.lead().m, mb = l / b.lead().m;
    K ca = b.lead().c;
    Vec<K> left = a.mul_term(ma, ca);
    return Vec<K>::sub_scaled(left, b, mb, a.lead().c);
  }

  void add(Vec<K> h) {
    std::size_t k = basis_.size();
    const int comp = h.lead().comp;
    const Monomial lh = h.lead().m;
    basis_.push_back(std::move(h));
    index_.add(k, basis_[k]);
    const bool product_ok = F_.rank() == 1;

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& li = basis_[i].lead();
      if (li.comp != comp) continue;
      cands.push_back({i, Monomial::lcm(li.m, lh), product_ok && Monomial::coprime(li.m, lh)});
    }
    // Chain criterion on old pairs.
    for (auto& p : pairs_) {
      if (!p.live || p.comp != comp) continue;
      if (!lh.divides(p.lcm)) continue;
      Monomial li = Monomial::lcm(basis_[p.i].lead().m, lh);
      Monomial lj = Monomial::lcm(basis_[p.j].lead().m, lh);
      if (li != p.lcm && lj != p.lcm) p.live = false;
    }
    // Proper-divisor elimination among the new pairs.
    for (auto& a : cands)
      for (auto& b : cands)
        if (&a != &b && b.lcm.divides(a.lcm) && b.lcm != a.lcm) {
          a.keep = false;
          break;
        }
    // Equal lcms: keep one, or none if any member satisfies the product criterion.
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].keep) continue;
      bool any_coprime = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y)
        if (cands[y].keep && cands[y].lcm == cands[x].lcm) {
          any_coprime = any_coprime || cands[y].coprime;
          cands[y].keep = false;
        }
      if (any_coprime) cands[x].keep = false;
    }
    for (auto& c : cands)
      if (c.keep) pairs_.push_back({c.i, k, c.lcm, comp, c.lcm.degree() - F_.twist(comp)});
  }

  void compact() {
    pairs_.erase(std::remove_if(pairs_.begin(), pairs_.end(), [](const Pair& p) { return !p.live; }),
                 pairs_.end());
  }

  FreeModule F_;
  GroebnerOptions opt_;
  std::vector<Vec<K>> basis_;
  LeadIndex<K> index_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> minimal_;
};

}  // namespace detail

// Tail-reduce a minimal Groebner basis in place.
template <class K>
void interreduce(std::vector<Vec<K>>& basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    LeadIndex<K> idx;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (i != k) idx.add(i, basis[i]);
    basis[k] = reduce_vec<K>(basis[k], basis, idx, true, nullptr, std::size_t{1});
    normalize(basis[k]);
  }
}

// Reduced Groebner basis of the submodule generated by `in.gens` together
// with quotient-ideal multiples I·e_k when `quotient` is non-empty.
template <class K>
SubmoduleBasis<K> groebner(const SubmoduleBasis<K>& in, const std::vector<Poly<K>>& quotient = {},
                           const GroebnerOptions& opt = {}) {
  if (in.groebner && quotient.empty()) return in;
  std::vector<Vec<K>> gens;
  for (auto& f : quotient)
    for (int k = 0; k < in.module.rank(); ++k) gens.push_back(Vec<K>::from_poly(f, k));
  std::size_t nb = gens.size();
  gens.insert(gens.end(), in.gens.begin(), in.gens.end());
  detail::BuchbergerEngine<K> eng(in.module, opt);
  eng.run(gens, nb);
  std::vector<Vec<K>> basis = std::move(eng.basis());
  interreduce(basis);
  return SubmoduleBasis<K>(in.module, std::move(basis), true);
}

// Subset of `in.gens` (indices) that minimally generates the submodule
// modulo I·F. Generators must be homogeneous.
template <class K>
std::vector<std::size_t> minimal_generator_indices(const SubmoduleBasis<K>& in,
                                                   const std::vector<Poly<K>>& quotient = {},
                                                   const GroebnerOptions& opt = {}) {
  std::vector<Vec<K>> gens;
  for (auto& f : quotient)
    for (int k = 0; k < in.module.rank(); ++k) gens.push_back(Vec<K>::from_poly(f, k));
  std::size_t nb = gens.size();
  gens.insert(gens.end(), in.gens.begin(), in.gens.end());
  detail::BuchbergerEngine<K> eng(in.module, opt);
  eng.run(gens, nb);
  std::vector<std::size_t> out;
  for (std::size_t k : eng.minimal()) out.push_back(k - nb);
  std::sort(out.begin(), out.end());
  return out;
}

template <class K>
SubmoduleBasis<K> minimal_generators(const SubmoduleBasis<K>& in, const std::vector<Poly<K>>& quotient = {},
                                     const GroebnerOptions& opt = {}) {
  auto idx = minimal_generator_indices(in, quotient, opt);
  std::vector<Vec<K>> gens;
  for (std::size_t k : idx) gens.push_back(in.gens[k]);
  return SubmoduleBasis<K>(in.module, std::move(gens), false);
}

template <class K>
Vec<K> normal_form(const Vec<K>& v, const SubmoduleBasis<K>& gb) {
  if (!gb.groebner) throw InputError("normal form requires a Groebner basis");
  LeadIndex<K> idx;
  for (std::size_t i = 0; i < gb.gens.size(); ++i) idx.add(i, gb.gens[i]);
  return reduce_vec(v, gb.gens, idx, true);
}

template <class K>
bool contains(const SubmoduleBasis<K>& gb, const Vec<K>& v) {
  return normal_form(v, gb).is_zero();
}

// True if every generator of `b` lies in the submodule with Groebner basis `gb`.
template <class K>
bool contains_all(const SubmoduleBasis<K>& gb, const SubmoduleBasis<K>& b) {
  for (auto& g : b.gens)
    if (!contains(gb, g)) return false;
  return true;
}

// Buchberger criterion check: every S-pair of `gb` reduces to zero.
template <class K>
bool is_groebner_basis(const SubmoduleBasis<K>& gb) {
  LeadIndex<K> idx;
  for (std::size_t i = 0; i < gb.gens.size(); ++i) idx.add(i, gb.gens[i]);
  for (std::size_t i = 0; i < gb.gens.size(); ++i)
    for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
      const auto& a = gb.gens[i].lead();
      const auto& b = gb.gens[j].lead();
      if (a.comp != b.comp) continue;
      Monomial l = Monomial::lcm(a.m, b.m);
      Vec<K> s = Vec<K>::sub_scaled(gb.gens[i].mul_term(l / a.m, b.c), gb.gens[j], l / b.m, a.c);
      if (!reduce_vec(s, gb.gens, idx, true).is_zero()) return false;
    }
  return true;
}

// Ideal helpers: an ideal is a submodule of S^1 with twist 0.
template <class K>
SubmoduleBasis<K> ideal_basis(const std::vector<Poly<K>>& gens) {
  std::vector<Vec<K>> v;
  for (auto& g : gens)
    if (!g.is_zero()) v.push_back(Vec<K>::from_poly(g, 0));
  return SubmoduleBasis<K>(FreeModule::uniform(1, 0), std::move(v));
}

template <class K>
std::vector<Poly<K>> ideal_polys(const SubmoduleBasis<K>& b) {
  std::vector<Poly<K>> out;
  for (auto& g : b.gens) out.push_back(g.component(0));
  return out;
}

template <class K>
std::vector<Poly<K>> groebner_ideal(const std::vector<Poly<K>>& gens, const GroebnerOptions& opt = {}) {
  return ideal_polys(groebner(ideal_basis(gens), {}, opt));
}

}  // namespace netlog
