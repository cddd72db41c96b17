#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/exact_algebra.hpp"
#include "netlog/graded/hilbert.hpp"
#include "netlog/groebner/linear_algebra.hpp"

namespace netlog {

// Σ_{k=0}^{p} (-1)^{p-k} C(N,k) [C(N+k(d-1)+m, N) - C(N+k(d-1)-d+m, N)],
// binomials with negative upper index read as 0.
inline mpz_class wedge_h0_formula(long N, long d, long p, long m) {
  if (p < 1 || p >= N - 1)
    throw InputError("wedge_h0_formula needs 1 <= p < N-1 (got N=" + std::to_string(N) + ", p=" + std::to_string(p) +
                     "); outside this range the intermediate h¹ terms need not vanish");
  if (d < 1) throw InputError("wedge_h0_formula needs d >= 1");
  mpz_class s = 0;
  for (long k = 0; k <= p; ++k) {
    const long base = N + k * (d - 1) + m;
    mpz_class term = binomial(N, k) * (binomial(base, N) - binomial(base - d, N));
    if ((p - k) % 2) s -= term;
    else s += term;
  }
  return s;
}

template <class K>
struct CubicRecovery {
  std::optional<Poly<K>> cubic;  // one representative
  int family_dimension = 0;      // dimension of the affine solution set
};

// Solve ∂F/∂x_i = Q_i (i = 0,1,2) for a cubic F in k[x0..x3].
template <class K>
CubicRecovery<K> recover_cubic_from_gradient(const PolyRing<K>& S, const std::vector<Poly<K>>& Q) {
  if (S.nvars() != 4) throw InputError("cubic recovery works in k[x0..x3]");
  if (Q.size() != 3) throw InputError("cubic recovery needs three quadrics");
  for (auto& q : Q)
    if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != 2))
      throw InputError("cubic recovery needs homogeneous quadrics");
  const auto cubics = S.monomials_of_degree(3);
  const auto quads = S.monomials_of_degree(2);
  const K zero = S.scalar(0), one = S.scalar(1);
  auto row_of = [&](const Monomial& m) {
    for (std::size_t r = 0; r < quads.size(); ++r)
      if (quads[r] == m) return static_cast<int>(r);
    throw InputError("monomial outside degree 2");
  };
  const int nq = static_cast<int>(quads.size()), nc = static_cast<int>(cubics.size());
  DenseMatrix<K> A(3 * nq, nc, zero);
  std::vector<K> b(3 * nq, zero);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < nc; ++j) {
      const Poly<K> dj = partial_derivative(S.monomial(cubics[j]), i);
      for (auto& t : dj.terms()) A(i * nq + row_of(t.m), j) += t.c;
    }
    for (auto& t : Q[i].terms()) b[i * nq + row_of(t.m)] = t.c;
  }
  CubicRecovery<K> out;
  auto x = A.solve(b, zero);
  if (!x) return out;
  out.family_dimension = static_cast<int>(A.nullspace(zero, one).size());
  Poly<K> F;
  for (int j = 0; j < nc; ++j)
    if (!(*x)[j].is_zero()) F = F + Poly<K>::monomial(cubics[j], (*x)[j]);
  out.cubic = F;
  return out;
}

}  // namespace netlog
