#pragma once

#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/chern.hpp"
#include "netlog/graded/duality.hpp"
#include "netlog/graded/resolution.hpp"
#include "netlog/curves/curves.hpp"

namespace netlog {

// O_Q(a,b) on Q = V(x0x3 - x1x2): I_A^{b-a}(b) for a <= b and I_B^{a-b}(a)
// otherwise, with A = V(x0,x1) of class (1,0) and B = V(x0,x2) of class (0,1).
template <class K>
PresentedModule<K> quadric_line_bundle(const RingPtr<K>& R, int a, int b) {
  const PolyRing<K>& S = *R;
  if (S.nvars() != 4) throw InputError("the quadric lives in P^3");
  const int k = a <= b ? b - a : a - b;
  const int u = a <= b ? 1 : 2;
  Poly<K> q = S.var(0) * S.var(3) - S.var(1) * S.var(2);
  std::vector<Vec<K>> gens;
  for (int i = 0; i <= k; ++i) {
    Poly<K> m = S.one();
    for (int e = 0; e < i; ++e) m *= S.var(0);
    for (int e = i; e < k; ++e) m *= S.var(u);
    gens.push_back(Vec<K>::from_poly(m, 0));
  }
  return PresentedModule<K>::image(R, FreeModule::uniform(1, std::max(a, b)), gens, {q}, true);
}

// χ(O_Q(a,b)(t)) = (t+a+1)(t+b+1).
inline UPoly quadric_line_bundle_chi(int a, int b) {
  return UPoly({mpq_class(a + 1), mpq_class(1)}) * UPoly({mpq_class(b + 1), mpq_class(1)});
}

// Sign of p - q for t >> 0.
inline int compare_eventually(const UPoly& p, const UPoly& q) {
  UPoly d = p - q;
  if (d.is_zero()) return 0;
  return sgn(d.coeff(d.degree()));
}

struct ScanCell {
  int a = 0, b = 0;
  mpz_class h0_twist;       // h⁰(E(-a,-b))
  mpz_class h0_hull_twist;  // h⁰(E**(-a,-b))
  std::optional<int> z;     // smallest admissible |Z|, if O(a,b) maps to E**
  UPoly P_F;
  std::string outcome;      // "no map", "excluded by c2", "below", "violates"
  bool reverified = false;
};

struct StabilityVerdict {
  std::string polarization = "O_Q(1,1)";
  int lo = 0, hi = 0;
  UPoly P_E;  // reduced Hilbert polynomial of E
  std::vector<ScanCell> cells;
  std::string verdict;  // "stable-certified-on-window", "destabilized", "inconclusive"
  std::optional<std::pair<int, int>> witness;
  std::string explanation;
};

struct ScanOptions {
  int lo = -2, hi = 2;
  bool parallel = true;
};

namespace detail {

template <class K>
mpz_class h0_twisted(const PresentedModule<K>& E, const RingPtr<K>& R, int a, int b, const GroebnerOptions& opt) {
  auto T = tensor(E, quadric_line_bundle(R, -a, -b), opt);
  return Cohomology<K>(T, opt).h(0, 0);
}

template <class K>
ScanCell scan_cell(const PresentedModule<K>& E, const PresentedModule<K>& hull, const RingPtr<K>& R,
                   const UPoly& PE, long c2, int a, int b, const GroebnerOptions& opt) {
  ScanCell c;
  c.a = a;
  c.b = b;
  c.h0_hull_twist = h0_twisted(hull, R, a, b, opt);
  if (c.h0_hull_twist == 0) {
    c.outcome = "no map";
    return c;
  }
  c.h0_twist = h0_twisted(E, R, a, b, opt);
  const int zmin = c.h0_twist > 0 ? 0 : 1;
  // c2 = (a,b)·(1-a,1-b) + |Z| + |Z'| with |Z'| >= 0.
  const long zmax = c2 - (a + b - 2L * a * b);
  if (zmin > zmax) {
    c.outcome = "excluded by c2";
    return c;
  }
  c.z = zmin;
  c.P_F = quadric_line_bundle_chi(a, b) - UPoly::constant(mpq_class(zmin));
  c.outcome = compare_eventually(c.P_F, PE) >= 0 ? "violates" : "below";
  return c;
}

}  // namespace detail

// Bounded search for saturated rank-one subsheaves I_Z(a,b) of a rank-2
// sheaf E on Q with c1 = (1,1), compared in the reduced Hilbert order.
template <class K>
StabilityVerdict gieseker_scan_quadric(const PresentedModule<K>& E, const ScanOptions& so = {},
                                       const GroebnerOptions& opt = {}) {
  if (!is_standard_quadric(E)) throw InputError("the scan needs a module over k[x0..x3]/(x0x3-x1x2)");
  const RingPtr<K>& R = E.ring();
  StabilityVerdict v;
  v.lo = so.lo;
  v.hi = so.hi;
  ChernOptions co;
  co.c1_squared = 2;
  co.check_locally_free = false;
  auto rep = chern_report(E, SurfaceData::quadric(), co, opt);
  if (rep.rank != 2 || rep.c1_dot_H != 2)
    throw CheckFailed("rank 2 with c1 = (1,1)", "E has rank " + std::to_string(rep.rank) + " and c1·H = " +
                                                     rep.c1_dot_H.get_str());
  auto bd = bidegree_c1(E, opt);
  if (!(bd == Bidegree{1, 1})) throw CheckFailed("rank 2 with c1 = (1,1)", "c1 is not (1,1)");
  const long c2 = rep.c2->get_si();
  v.P_E = rep.hilbert.polynomial * UPoly::constant(mpq_class(1, 2));
  auto P = E.presentation(opt);
  auto hull = double_dual(P, opt).presentation(opt);

  std::vector<std::pair<int, int>> classes;
  for (int a = so.lo; a <= so.hi; ++a)
    for (int b = so.lo; b <= so.hi; ++b) classes.push_back({a, b});
  if (so.parallel) {
    std::vector<std::future<ScanCell>> jobs;
    for (auto [a, b] : classes)
      jobs.push_back(std::async(std::launch::async, [&, a = a, b = b] {
        return detail::scan_cell(P, hull, R, v.P_E, c2, a, b, opt);
      }));
    for (auto& j : jobs) v.cells.push_back(j.get());
  } else {
    for (auto [a, b] : classes) v.cells.push_back(detail::scan_cell(P, hull, R, v.P_E, c2, a, b, opt));
  }

  // Re-derive every cell that found a map from scratch.
  for (auto& c : v.cells) {
    if (!c.z) continue;
    auto L = quadric_line_bundle(R, c.a, c.b);
    bool ok = L.hilbert_polynomial() == quadric_line_bundle_chi(c.a, c.b);
    ok = ok && detail::h0_twisted(hull, R, c.a, c.b, opt) == c.h0_hull_twist;
    ok = ok && (*c.z == 0) == (detail::h0_twisted(E, R, c.a, c.b, opt) > 0);
    ok = ok && (L.hilbert_polynomial() - UPoly::constant(mpq_class(*c.z))) == c.P_F;
    c.reverified = ok;
    if (!ok) throw CheckFailed("scan re-verification", "cell (" + std::to_string(c.a) + "," + std::to_string(c.b) +
                                                           ") did not reproduce");
  }

  for (auto& c : v.cells)
    if (c.outcome == "violates" && !v.witness) v.witness = std::make_pair(c.a, c.b);
  const bool covers = so.lo <= -1 && so.hi >= 1;
  if (v.witness) {
    v.verdict = "destabilized";
    v.explanation = "class (" + std::to_string(v.witness->first) + "," + std::to_string(v.witness->second) +
                    ") gives a subsheaf whose reduced Hilbert polynomial is not below that of E";
  } else if (!covers) {
    v.verdict = "inconclusive";
    v.explanation = "the window does not cover the classes a <= 1, b <= 1, a + b >= 0";
  } else {
    v.verdict = "stable-certified-on-window";
    v.explanation = "no class in the window yields a subsheaf I_Z(a,b) with P_F >= P_E; this is a bounded "
                    "certificate, classes outside the window are not examined";
  }
  return v;
}

}  // namespace netlog
