#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "netlog/graded/duality.hpp"
#include "netlog/graded/fitting.hpp"
#include "netlog/pipeline/log_tangent.hpp"

namespace netlog {

struct ExactnessCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// HF(middle) = Σ sign·HF(parts) over [lo, hi] and as polynomials.
inline ExactnessCheck hilbert_identity(std::string name, const HilbertSeries& middle,
                                       const std::vector<std::pair<int, HilbertSeries>>& parts, int lo, int hi) {
  HilbertSeries rest = middle;
  for (auto& [sign, h] : parts) {
    if (sign > 0)
      rest -= h;
    else
      rest += h;
  }
  ExactnessCheck c{std::move(name), true, ""};
  for (int t = lo; t <= hi && c.passed; ++t)
    if (rest.value(t) != 0) {
      c.passed = false;
      c.detail = "Hilbert functions disagree in degree " + std::to_string(t);
    }
  if (c.passed && !rest.polynomial().is_zero()) {
    c.passed = false;
    c.detail = "Hilbert polynomials disagree";
  }
  return c;
}

// V(A) = V(B) as sets in P^N.
template <class K>
bool same_support(const RingPtr<K>& R, const std::vector<Poly<K>>& A, const std::vector<Poly<K>>& B,
                  const GroebnerOptions& opt = {}) {
  auto empty = [&](const std::vector<Poly<K>>& I, const std::vector<Poly<K>>& J) {
    return krull_dimension(*R, saturate_ideal(R, I, J, opt), opt) == 0;
  };
  return empty(A, B) && empty(B, A);
}

template <class K>
CIPair<K> rescaled_pair(const CIPair<K>& P, long lambda, long mu) {
  CIPair<K> Q = P;
  for (auto& f : Q.F) f = f.scaled(P.ring->scalar(lambda));
  for (auto& g : Q.G) g = g.scaled(P.ring->scalar(mu));
  std::reverse(Q.F.begin(), Q.F.end());
  std::reverse(Q.G.begin(), Q.G.end());
  return Q;
}

// Every Hilbert-additivity and structural check available for a pair.
template <class K>
std::vector<ExactnessCheck> verify_exactness(const CIPair<K>& P, int lo, int hi, const GroebnerOptions& opt = {}) {
  std::vector<ExactnessCheck> out;
  auto net = net_log_tangent(P, opt);
  const bool reduced = P.s() > 0 && is_reduced_section(P, opt);
  const auto hnet = net.hilbert_series();

  auto K0 = restricted_log_kernel(P, opt);
  auto dd = duality_data(K0, opt);
  out.push_back(hilbert_identity("torsion sequence of the restricted kernel", K0.hilbert_series(),
                                 {{1, dd.torsion.hilbert_series()}, {1, dd.torsion_free.hilbert_series()}}, lo, hi));
  out.push_back(hilbert_identity("torsion-free quotient equals the image module", dd.torsion_free.hilbert_series(),
                                 {{1, hnet}}, lo, hi));
  {
    auto tq = torsion_submodule(dd.torsion_free, opt);
    out.push_back({"torsion-free quotient has zero torsion", tq.is_zero(), ""});
  }

  if (reduced) {
    auto tor1 = tor_defect(P, opt);
    auto refl = double_dual(net, opt);
    out.push_back(hilbert_identity("reflexive hull = net sheaf + Tor_1 defect", refl.hilbert_series(),
                                   {{1, hnet}, {1, tor1.hilbert_series()}}, lo, hi));
    auto refl2 = double_dual(refl, opt);
    out.push_back(hilbert_identity("double dual is idempotent", refl2.hilbert_series(),
                                   {{1, refl.hilbert_series()}}, lo, hi));
    auto fields = log_vector_fields(P, opt);
    out.push_back(hilbert_identity("reflexive hull matches ker(ξ ⊗ O_X)", refl.hilbert_series(),
                                   {{1, fields.hilbert_series()}}, lo, hi));
    if (P.r() == 1 && P.s() == 1) {
      auto rd = residue_data(P, opt);
      out.push_back(hilbert_identity("residue sequence T_X(Y) -> T_X -> N", rd.tangent.hilbert_series(),
                                     {{1, hnet}, {1, rd.normal.hilbert_series()}}, lo, hi));
      out.push_back(hilbert_identity("residue sequence T_X(-log D) -> T_X -> J_D(D)", rd.tangent.hilbert_series(),
                                     {{1, rd.log_fields.hilbert_series()}, {1, rd.jacobian.hilbert_series()}}, lo,
                                     hi));
      out.push_back(hilbert_identity("N = J_D(D) + Tor_1 defect", rd.normal.hilbert_series(),
                                     {{1, rd.jacobian.hilbert_series()}, {1, tor1.hilbert_series()}}, lo, hi));
    }
    if (P.N() == 3 && P.r() == 1 && P.s() == 1) {
      auto lf = is_locally_free(net, P.N() + 1 - P.r() - P.s(), opt);
      bool same = lf.locally_free ? krull_dimension(*P.ring, singular_locus_ideal(P), opt) == 0
                                  : same_support(P.ring, lf.singular_support, singular_locus_ideal(P), opt);
      out.push_back({"singular support of the net sheaf = Sing(D)", same, ""});
    }
  }

  auto Q = rescaled_pair(P, 2, -3);
  auto hq = net_log_tangent(Q, opt).hilbert(lo, hi);
  out.push_back({"generator independence under scaling and permutation", hq == net.hilbert(lo, hi), ""});
  return out;
}

}  // namespace netlog
