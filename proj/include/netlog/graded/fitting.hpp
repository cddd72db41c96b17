#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/module.hpp"

namespace netlog {

template <class K>
std::optional<mpq_class> as_rational(const K& a) {
  auto c = a.rational_coordinates();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c.empty() ? mpq_class(0) : c[0];
}

namespace detail {

template <class K>
Poly<K> determinant(const std::vector<std::vector<Poly<K>>>& A) {
  const std::size_t n = A.size();
  if (n == 0) return Poly<K>();
  if (n == 1) return A[0][0];
  if (n == 2) return A[0][0] * A[1][1] - A[0][1] * A[1][0];
  Poly<K> det;
  for (std::size_t j = 0; j < n; ++j) {
    if (A[0][j].is_zero()) continue;
    std::vector<std::vector<Poly<K>>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly<K>> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(A[i][c]);
      sub.push_back(std::move(row));
    }
    Poly<K> term = A[0][j] * determinant(sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// All k x k minors of a polynomial matrix.
template <class K>
std::vector<Poly<K>> minors(const std::vector<std::vector<Poly<K>>>& A, int k) {
  std::vector<Poly<K>> out;
  const int r = static_cast<int>(A.size());
  const int c = r == 0 ? 0 : static_cast<int>(A[0].size());
  if (k <= 0) return {Poly<K>()};
  if (k > r || k > c) return {};
  std::vector<std::vector<int>> rows, cols;
  std::vector<int> cur;
  detail::combinations(r, k, 0, cur, rows);
  detail::combinations(c, k, 0, cur, cols);
  for (auto& ri : rows)
    for (auto& ci : cols) {
      std::vector<std::vector<Poly<K>>> sub;
      for (int i : ri) {
        std::vector<Poly<K>> row;
        for (int j : ci) row.push_back(A[i][j]);
        sub.push_back(std::move(row));
      }
      Poly<K> d = detail::determinant(sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

// Fitting ideal Fitt_r(M) + I: minors of size (n - r) of a presentation with n
// generators.
template <class K>
std::vector<Poly<K>> fitting_ideal(const PresentedModule<K>& M, int r, const GroebnerOptions& opt = {}) {
  auto P = M.pruned(opt);
  const int n = P.ambient().rank();
  std::vector<Poly<K>> J = P.ideal();
  if (n - r <= 0) {
    J.push_back(P.ring()->one());
    return J;
  }
  auto A = P.relation_map().matrix();
  auto m = minors(A, n - r);
  J.insert(J.end(), m.begin(), m.end());
  return J;
}

template <class K>
HilbertSeries ideal_quotient_series(const PolyRing<K>& R, const std::vector<Poly<K>>& J, const GroebnerOptions& opt = {}) {
  auto gb = groebner(ideal_basis(J), {}, opt);
  return hilbert_series_of_quotient(gb, R.nvars());
}

// Degree of a zero-dimensional projective scheme S/J (0 when empty); throws
// when V(J) has positive dimension.
template <class K>
long scheme_degree(const PolyRing<K>& R, const std::vector<Poly<K>>& J, const GroebnerOptions& opt = {}) {
  auto hs = ideal_quotient_series(R, J, opt);
  UPoly p = hs.polynomial();
  if (p.degree() > 0) throw InputError("scheme is not zero-dimensional");
  return p.is_zero() ? 0 : p.coeff(0).get_num().get_si();
}

template <class K>
struct LocalFreeness {
  bool locally_free = false;
  std::vector<Poly<K>> singular_support;  // saturated Fitting ideal
};

template <class K>
LocalFreeness<K> is_locally_free(const PresentedModule<K>& M, int expected_rank, const GroebnerOptions& opt = {}) {
  auto J = fitting_ideal(M, expected_rank, opt);
  LocalFreeness<K> out;
  out.singular_support = saturate_ideal(M.ring(), J, irrelevant_ideal(*M.ring()), opt);
  auto hs = ideal_quotient_series(*M.ring(), out.singular_support, opt);
  out.locally_free = hs.polynomial().is_zero();
  return out;
}

// A K-rational point of projective space with a multiplicity.
template <class K>
struct ProjectivePoint {
  std::vector<K> coords;
  long multiplicity = 0;
};

template <class K>
std::string point_string(const ProjectivePoint<K>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ":";
    s += p.coords[i].is_atomic() ? p.coords[i].to_string() : "(" + p.coords[i].to_string() + ")";
  }
  return s + "]";
}

// Scale so the first nonzero coordinate is 1.
template <class K>
std::vector<K> normalize_point(std::vector<K> c) {
  for (auto& a : c)
    if (!a.is_zero()) {
      K inv = a.inverse();
      for (auto& b : c) b *= inv;
      break;
    }
  return c;
}

template <class K>
std::vector<Poly<K>> point_ideal(const PolyRing<K>& R, const std::vector<K>& q) {
  int j = -1;
  for (int i = 0; i < R.nvars(); ++i)
    if (!q[i].is_zero()) {
      j = i;
      break;
    }
  if (j < 0) throw InputError("the zero vector is not a projective point");
  std::vector<Poly<K>> m;
  for (int i = 0; i < R.nvars(); ++i)
    if (i != j) m.push_back(R.var(i).scaled(q[j]) - R.var(j).scaled(q[i]));
  return m;
}

// J : m_q^∞ by a translation sending q to a coordinate point, where the
// saturation is by variables only.
template <class K>
std::vector<Poly<K>> saturate_at_point(const RingPtr<K>& R, const std::vector<Poly<K>>& J, const std::vector<K>& q,
                                       const GroebnerOptions& opt = {}) {
  const int n = R->nvars();
  int j = -1;
  for (int i = 0; i < n; ++i)
    if (!q[i].is_zero()) {
      j = i;
      break;
    }
  if (j < 0) throw InputError("the zero vector is not a projective point");
  // x_i -> x_i + (q_i/q_j) x_j sends V(x_i : i != j) to q.
  std::vector<Poly<K>> fwd, back;
  K inv = q[j].inverse();
  for (int i = 0; i < n; ++i) {
    if (i == j) {
      fwd.push_back(R->var(i));
      back.push_back(R->var(i));
    } else {
      fwd.push_back(R->var(i) + R->var(j).scaled(q[i] * inv));
      back.push_back(R->var(i) - R->var(j).scaled(q[i] * inv));
    }
  }
  std::vector<Poly<K>> moved;
  for (auto& f : J) moved.push_back(substitute(f, fwd, *R));
  std::vector<Poly<K>> m;
  for (int i = 0; i < n; ++i)
    if (i != j) m.push_back(R->var(i));
  auto sat = saturate_ideal(R, moved, m, opt);
  std::vector<Poly<K>> out;
  for (auto& f : sat) out.push_back(substitute(f, back, *R));
  return out;
}

template <class K>
bool vanishes_at(const std::vector<Poly<K>>& J, const std::vector<K>& q) {
  for (auto& f : J)
    if (!evaluate(f, q).is_zero()) return false;
  return true;
}

// Points of a zero-dimensional scheme V(J) rational over the coefficient
// field, with local multiplicities; `residual` is the degree not accounted
// for by rational points (non-rational Galois orbits).
template <class K>
struct PointSet {
  std::vector<ProjectivePoint<K>> points;
  long degree = 0;
  long residual = 0;
};

template <class K>
PointSet<K> rational_points(const RingPtr<K>& R, const std::vector<Poly<K>>& Jin, const GroebnerOptions& opt = {}) {
  const PolyRing<K>& S = *R;
  const int n = S.nvars();
  PointSet<K> out;
  auto J = saturate_ideal(R, Jin, irrelevant_ideal(S), opt);
  out.degree = scheme_degree(S, J, opt);
  if (out.degree == 0) return out;
  // A linear form avoiding every point: HP(S/(J + l)) = 0.
  Poly<K> ell;
  bool found = false;
  for (int trial = 0; trial < 200 && !found; ++trial) {
    ell = Poly<K>();
    if (trial < n) {
      ell = S.var(trial);
    } else {
      for (int i = 0; i < n; ++i) ell += S.var(i).scaled(S.scalar(1 + (i * (trial - n + 1)) % (trial - n + 3)));
    }
    auto Jl = J;
    Jl.push_back(ell);
    found = ideal_quotient_series(S, Jl, opt).polynomial().is_zero();
  }
  if (!found) throw CapExceeded("no linear form avoiding the points was found");
  auto gb = groebner(ideal_basis(J), {}, opt);
  auto hs = hilbert_series_of_quotient(gb, n);
  int D = std::max(0, hs.agreement_bound());
  while (hs.value(D) != out.degree || hs.value(D + 1) != out.degree) ++D;
  // Standard monomials of degrees D and D+1.
  auto standard = [&](int d) {
    std::vector<Monomial> b;
    for (auto& m : S.monomials_of_degree(d))
      if (std::none_of(gb.gens.begin(), gb.gens.end(), [&](const Vec<K>& g) { return g.lead().m.divides(m); }))
        b.push_back(m);
    return b;
  };
  auto B0 = standard(D), B1 = standard(D + 1);
  const int deg = static_cast<int>(out.degree);
  if (static_cast<int>(B0.size()) != deg || static_cast<int>(B1.size()) != deg)
    throw InputError("standard monomial count does not match the degree");
  std::unordered_map<Monomial, int, MonomialHash> pos;
  for (int k = 0; k < deg; ++k) pos[B1[k]] = k;
  auto mult = [&](const Poly<K>& f) {
    DenseMatrix<K> A(deg, deg, S.scalar(0));
    for (int c = 0; c < deg; ++c) {
      Vec<K> v = normal_form(Vec<K>::from_poly(f * S.monomial(B0[c]), 0), gb);
      for (auto& t : v.terms()) A(pos.at(t.m), c) = t.c;
    }
    return A;
  };
  auto L = mult(ell);
  auto Linv = L.inverse(S.scalar(0), S.scalar(1));
  if (!Linv) throw InputError("chosen linear form is a zero divisor");
  std::vector<std::vector<mpq_class>> values(n);
  for (int i = 0; i < n; ++i) {
    auto Mi = (*Linv) * mult(S.var(i));
    auto cp = Mi.charpoly(S.scalar(0), S.scalar(1));
    std::vector<mpq_class> qc;
    bool rational = true;
    for (auto& c : cp) {
      auto r = as_rational(c);
      if (!r) {
        rational = false;
        break;
      }
      qc.push_back(*r);
    }
    if (rational) values[i] = UPoly(qc).rational_roots();
  }
  // Candidates: every combination with l(q) = 1, checked against J.
  std::vector<K> cur(n, S.scalar(0));
  long accounted = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!evaluate(ell, cur).is_zero() && vanishes_at(J, cur)) {
        auto q = normalize_point(cur);
        for (auto& p : out.points)
          if (p.coords == q) return;
        long m = out.degree - scheme_degree(S, saturate_at_point(R, J, q, opt), opt);
        out.points.push_back({q, m});
        accounted += m;
      }
      return;
    }
    for (auto& v : values[i]) {
      cur[i] = S.scalar(v);
      rec(i + 1);
    }
  };
  rec(0);
  out.residual = out.degree - accounted;
  return out;
}

}  // namespace netlog
