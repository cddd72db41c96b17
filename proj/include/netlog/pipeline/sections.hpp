#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/fitting.hpp"
#include "netlog/pipeline/ci_pair.hpp"

namespace netlog {

template <class K>
struct SectionSingularity {
  std::vector<ProjectivePoint<K>> points;
  std::vector<long> multiplicities;     // sorted, largest first
  long degree = 0;                      // deg R
  long residual = 0;                    // part of deg R over non-rational points
  bool non_rational_support = false;
  std::vector<Poly<K>> residual_ideal;  // R with the rational points removed
  std::optional<long> r0_length;
  std::string label;
};

inline std::string milnor_label(std::vector<long> mu) {
  std::sort(mu.rbegin(), mu.rend());
  static const std::map<std::vector<long>, std::string> table = {
      {{}, "smooth"}, {{1}, "a"},       {{2}, "b"},       {{1, 1}, "c1"},
      {{3}, "c2"},    {{1, 1, 1}, "d1"}, {{4}, "d2"},
  };
  auto it = table.find(mu);
  return it == table.end() ? "unclassified" : it->second;
}

// Ideal of 2x2 minors of the matrix with rows ∇F and ∇H.
template <class K>
std::vector<Poly<K>> critical_ideal(const PolyRing<K>& R, const Poly<K>& F, const Poly<K>& H) {
  return minors(jacobian_rows(std::vector<Poly<K>>{F, H}, R.nvars()), 2);
}

template <class K>
SectionSingularity<K> section_singularities(const RingPtr<K>& R, const Poly<K>& F, const Poly<K>& H,
                                            const GroebnerOptions& opt = {}) {
  const PolyRing<K>& S = *R;
  if (H.is_zero() || !H.is_homogeneous() || H.degree() != 1) throw InputError("H must be a linear form");
  auto P = make_ci_pair(R, {F}, {H}, opt);
  if (!is_reduced_section(P, opt)) throw CheckFailed("reduced section", "the hyperplane section X∩H is not reduced");
  SectionSingularity<K> out;
  auto R0 = critical_ideal(S, F, H);
  auto hs0 = ideal_quotient_series(S, saturate_ideal(R, R0, irrelevant_ideal(S), opt), opt);
  if (hs0.dimension() <= 1) out.r0_length = scheme_degree(S, R0, opt);
  auto J = R0;
  J.push_back(F);
  auto pts = rational_points(R, J, opt);
  out.degree = pts.degree;
  out.residual = pts.residual;
  out.non_rational_support = pts.residual > 0;
  out.points = pts.points;
  for (auto& p : out.points) out.multiplicities.push_back(p.multiplicity);
  std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
  if (out.non_rational_support) {
    auto rest = saturate_ideal(R, J, irrelevant_ideal(S), opt);
    for (auto& p : out.points) rest = saturate_ideal(R, rest, point_ideal(S, p.coords), opt);
    out.residual_ideal = rest;
  }
  const bool table_applies = S.nvars() == 4 && F.degree() == 3 && !out.non_rational_support;
  out.label = table_applies ? milnor_label(out.multiplicities) : "unclassified";
  return out;
}

// Content-free integral form of a linear form over ℚ; monic in the first
// nonzero coefficient otherwise.
template <class K>
Poly<K> normalize_linear_form(const PolyRing<K>& S, const Poly<K>& h) {
  if (h.is_zero()) return h;
  std::vector<mpq_class> q;
  bool rational = true;
  for (auto& t : h.terms()) {
    auto r = as_rational(t.c);
    if (!r) {
      rational = false;
      break;
    }
    q.push_back(*r);
  }
  if (!rational) return h.scaled(h.lead_coeff().inverse());
  mpz_class l = 1, g = 0;
  for (auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  for (auto& c : q) {
    mpq_class cl = c * l;
    mpz_class n = cl.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class s = mpq_class(l) / g;
  if (q.front() < 0) s = -s;
  return h.scaled(S.scalar(s));
}

template <class K>
Poly<K> tangent_plane(const PolyRing<K>& S, const Poly<K>& F, const std::vector<K>& p) {
  if (static_cast<int>(p.size()) != S.nvars()) throw InputError("point has the wrong number of coordinates");
  if (std::all_of(p.begin(), p.end(), [](const K& c) { return c.is_zero(); }))
    throw InputError("the zero vector is not a projective point");
  if (!evaluate(F, p).is_zero()) throw CheckFailed("point on X", "the point does not lie on V(F)");
  Poly<K> h;
  for (int i = 0; i < S.nvars(); ++i) h += S.var(i).scaled(evaluate(partial_derivative(F, i), p));
  if (h.is_zero()) throw CheckFailed("smooth point", "V(F) is singular at the point");
  return normalize_linear_form(S, h);
}

template <class K>
bool is_smooth_hypersurface(const RingPtr<K>& R, const Poly<K>& F, const GroebnerOptions& opt = {}) {
  std::vector<Poly<K>> J{F};
  for (int i = 0; i < R->nvars(); ++i) J.push_back(partial_derivative(F, i));
  return krull_dimension(*R, J, opt) == 0;
}

// F = g + h·q with q a quadric chosen so that V(F) is smooth; deterministic in `seed`.
template <class K>
Poly<K> smooth_extension(const RingPtr<K>& R, const Poly<K>& g, const Poly<K>& h, unsigned seed = 1,
                         int attempts = 200, const GroebnerOptions& opt = {}) {
  const PolyRing<K>& S = *R;
  if (g.is_zero() || !g.is_homogeneous() || g.degree() < 2) throw InputError("g must be a form of degree at least 2");
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto mons = S.monomials_of_degree(g.degree() - 1);
  for (int a = 0; a < attempts; ++a) {
    Poly<K> q;
    for (auto& m : mons) q += S.monomial(m).scaled(S.scalar(coeff(gen)));
    if (q.is_zero()) continue;
    Poly<K> F = g + h * q;
    if (is_smooth_hypersurface(R, F, opt)) return F;
  }
  throw CapExceeded("no smooth extension found within the attempt budget");
}

// Plane sections realizing each row of the cubic Milnor table, as forms in
// the first three variables.
struct SectionModel {
  std::string name;
  std::string g;
};

inline const std::vector<SectionModel>& cubic_section_models() {
  static const std::vector<SectionModel> models = {
      {"nodal", "x1^2*x2-x0^3-x0^2*x2"},
      {"cuspidal", "x1^2*x2-x0^3"},
      {"conic+secant", "x1*(x0*x2-x1^2)"},
      {"conic+tangent", "x0*(x0*x2-x1^2)"},
      {"triangle", "x0*x1*x2"},
      {"concurrent lines", "x0*x1*(x0-x1)"},
  };
  return models;
}

}  // namespace netlog
