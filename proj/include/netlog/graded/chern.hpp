#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/fitting.hpp"
#include "netlog/graded/resolution.hpp"

namespace netlog {

// Numerical data of a polarized smooth surface X with hyperplane class H.
// The canonical class is assumed to be a multiple K = kappa·H.
struct SurfaceData {
  long degree = 0;     // H²
  long kappa = 0;      // K = kappa·H
  long chi_O = 1;      // χ(O_X)

  static SurfaceData quadric() { return {2, -2, 1}; }
  static SurfaceData cubic() { return {3, -1, 1}; }
  long K_dot_H() const { return kappa * degree; }
};

struct ChernOptions {
  std::optional<mpz_class> c1_squared;
  std::vector<std::pair<int, int>> h_requests;  // (i, t)
  int lo = -2, hi = 6;
  bool check_locally_free = true;
};

struct SheafReport {
  int rank = 0;
  HilbertData hilbert;
  mpz_class c1_dot_H = 0;
  std::optional<mpz_class> c2;
  mpz_class c1sq_minus_2c2 = 0;
  std::map<std::pair<int, int>, mpz_class> h_table;
  std::optional<bool> locally_free;
  std::optional<mpz_class> expected_moduli_dim;
};

namespace detail {

inline mpz_class exact_integer(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw CheckFailed("chern", std::string(what) + " is not an integer: " + q.get_str());
  return q.get_num();
}

}  // namespace detail

// Chern numbers from P(t) = a t² + b t + c via Riemann-Roch on X:
//   a = r·H²/2,  b = c1·H − r·K·H/2,  c = r·χ(O) + (c1² − c1·K)/2 − c2.
inline SheafReport chern_from_polynomial(const UPoly& P, const SurfaceData& X,
                                         const std::optional<mpz_class>& c1_squared = std::nullopt) {
  if (P.degree() != 2) throw CheckFailed("chern", "Hilbert polynomial of a surface sheaf must be quadratic");
  if (X.degree <= 0) throw InputError("surface degree must be positive");
  SheafReport R;
  mpq_class r = 2 * P.coeff(2) / X.degree;
  R.rank = static_cast<int>(detail::exact_integer(r, "rank (leading coefficient over deg/2)").get_si());
  mpq_class c1H = P.coeff(1) + r * X.kappa * X.degree / 2;
  R.c1_dot_H = detail::exact_integer(c1H, "c1·H");
  mpq_class comb = 2 * (P.coeff(0) - r * X.chi_O) + X.kappa * c1H;
  R.c1sq_minus_2c2 = detail::exact_integer(comb, "c1²−2c2");
  if (c1_squared) {
    mpq_class c2 = (mpq_class(*c1_squared) - comb) / 2;
    R.c2 = detail::exact_integer(c2, "c2");
    if (R.rank == 2 && R.c1_dot_H == 0 && *c1_squared == 0) R.expected_moduli_dim = 4 * *R.c2 - 3 * X.chi_O;
  }
  return R;
}

template <class K>
SheafReport chern_report(const PresentedModule<K>& M, const SurfaceData& X, const ChernOptions& o = {},
                         const GroebnerOptions& opt = {}) {
  auto hs = M.hilbert_series();
  if (hs.dimension() != 3) throw CheckFailed("chern", "module does not define a sheaf supported on a surface");
  SheafReport R = chern_from_polynomial(hs.polynomial(), X, o.c1_squared);
  R.hilbert = hilbert_data(hs, o.lo, o.hi);
  if (!o.h_requests.empty()) {
    Cohomology<K> coh(M, opt);
    for (auto [i, t] : o.h_requests) R.h_table[{i, t}] = coh.h(i, t);
  }
  if (o.check_locally_free) R.locally_free = is_locally_free(M, R.rank, opt).locally_free;
  return R;
}

}  // namespace netlog
