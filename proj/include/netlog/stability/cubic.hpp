#pragma once

#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/curves/curves.hpp"
#include "netlog/graded/chern.hpp"
#include "netlog/graded/duality.hpp"
#include "netlog/graded/resolution.hpp"

namespace netlog {

struct LineEvidence {
  std::string name;
  bool in_D = false;
  SplittingType splitting;
  bool flag = false;
};

struct MuEvidence {
  std::vector<LineEvidence> lines;
  mpz_class h0_E;
  bool sections_flag = false;  // h⁰(E) > 0: O_S -> E has slope 0 = μ(E)
  bool any_flag() const {
    if (sections_flag) return true;
    for (auto& l : lines)
      if (l.flag) return true;
    return false;
  }
};

template <class K>
void require_rank_two_on_cubic(const PresentedModule<K>& E, const GroebnerOptions& opt) {
  auto hs = E.hilbert_series();
  auto [q, d] = hs.reduced();
  if (E.nvars() != 4 || d != 3 || q.at_one() != 6)
    throw CheckFailed("rank 2 on a cubic surface", "E is not a rank-2 sheaf supported on a cubic surface in P^3");
  (void)opt;
}

// Restrictions to a line catalog. A line is flagged when E|_L contains
// O_L(a) with a >= 2; the global side check flags h⁰(E) > 0.
template <class K>
MuEvidence mu_evidence_cubic(const PresentedModule<K>& E, const std::vector<RationalCurve<K>>& lines,
                             const GroebnerOptions& opt = {}) {
  require_rank_two_on_cubic(E, opt);
  MuEvidence ev;
  for (auto& L : lines) {
    LineEvidence le{L.name, L.in_D, restrict_to_curve(E, L, opt), false};
    le.flag = !le.splitting.degrees.empty() && le.splitting.degrees.front() >= 2;
    ev.lines.push_back(std::move(le));
  }
  ev.h0_E = Cohomology<K>(E, opt).h(0, 0);
  ev.sections_flag = ev.h0_E > 0;
  return ev;
}

struct LogCharacter {
  bool result = false;
  mpz_class h0_E1;
  bool globally_generated = false;
};

// Rank 2, c1·H = 0 and c1² - 2c2 = -18 on a cubic surface; true iff
// h⁰(E(1)) = 3 and E(1) is globally generated.
template <class K>
LogCharacter log_character_test(const PresentedModule<K>& E, const GroebnerOptions& opt = {}) {
  require_rank_two_on_cubic(E, opt);
  ChernOptions co;
  co.check_locally_free = false;
  auto rep = chern_report(E, SurfaceData::cubic(), co, opt);
  if (rep.rank != 2 || rep.c1_dot_H != 0 || rep.c1sq_minus_2c2 != -18)
    throw CheckFailed("log tangent invariants", "need rank 2, c1·H = 0 and c1² - 2c2 = -18 (c2 = 9 when c1 = 0)");
  LogCharacter out;
  out.h0_E1 = Cohomology<K>(E, opt).h(0, 1);
  if (out.h0_E1 != 3) return out;
  // A torsion-free sheaf agrees with its hull iff the Hilbert polynomials do;
  // the hull, a dual over the Cohen-Macaulay coordinate ring, is Γ_*(E).
  auto M = double_dual(E, opt);
  if (M.hilbert_polynomial() != E.hilbert_polynomial())
    throw InputError("global generation is only decided for reflexive E");
  if (M.hf(1) != out.h0_E1)
    throw CheckFailed("saturated module", "the reflexive hull disagrees with H⁰(E(1))");
  std::vector<Vec<K>> deg1;
  const PolyRing<K>& S = *M.ring();
  for (auto& u : M.generators()) {
    int du = u.degree(M.ambient());
    if (du > 1) continue;
    for (auto& m : S.monomials_of_degree(1 - du)) deg1.push_back(u.mul_term(m, S.scalar(1)));
  }
  auto N = PresentedModule<K>::subquotient(M.ring(), M.ambient(), deg1, M.relations(), M.ideal(), M.integral());
  out.globally_generated = !deg1.empty() && N.hilbert_polynomial() == M.hilbert_polynomial();
  out.result = out.h0_E1 == 3 && out.globally_generated;
  return out;
}

}  // namespace netlog
