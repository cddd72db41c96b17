#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "netlog/curves.hpp"
#include "netlog/exact_algebra.hpp"
#include "netlog/graded.hpp"
#include "netlog/groebner.hpp"
#include "netlog/pipeline.hpp"
#include "netlog/stability.hpp"

using namespace netlog;

namespace {

using Q = Rational;

RingPtr<Q> ring(std::vector<std::string> names) { return PolyRing<Q>::make(std::move(names), {}); }
RingPtr<Q> p3() { return ring({"x0", "x1", "x2", "x3"}); }

std::vector<Poly<Q>> polys(const PolyRing<Q>& R, std::vector<std::string> s) {
  std::vector<Poly<Q>> out;
  for (auto& x : s) out.push_back(parse_poly(x, R));
  return out;
}

CIPair<Q> pair(const RingPtr<Q>& R, std::vector<std::string> F, std::vector<std::string> G) {
  return make_ci_pair(R, polys(*R, F), polys(*R, G));
}

// Collects failed expectations for one criterion.
struct Checker {
  std::vector<std::string> failures;
  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", expected " << want;
      failures.push_back(os.str());
    }
  }
  void truth(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << hp_string(p); }
std::ostream& operator<<(std::ostream& os, const SplittingType& s) { return os << to_string(s); }
std::ostream& operator<<(std::ostream& os, const std::vector<long>& v) {
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ")";
}

const char* kQuadric = "x0*x3-x1*x2";
const char* kFermat = "x0^3+x1^3+x2^3+x3^3";

void criterion1(Checker& c) {
  auto R = p3();
  auto P = pair(R, {kQuadric}, {"x3"});
  auto xi = jacobian_map(P);
  auto want = polys(*R, {"x3", "-x2", "-x1", "x0", "0", "0", "0", "1"});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      c.truth(xi.entry(i, j) == want[4 * i + j], "Jacobian entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  auto net = net_log_tangent(P);
  c.eq(net.hilbert_polynomial(), parse_hp("2*t^2+6*t+3"), "HP(net)");
  ChernOptions co;
  co.c1_squared = 2;
  auto rep = chern_report(net, SurfaceData::quadric(), co);
  c.eq(rep.rank, 2, "rank");
  c.eq(rep.c1_dot_H, 2, "c1.H");
  c.truth(rep.c2 && *rep.c2 == 2, "c2 = 2");
  c.truth(bidegree_c1(net) == Bidegree{1, 1}, "bidegree_c1 = (1,1)");
  auto refl = reflexive_log_tangent(P);
  c.eq(refl.hilbert_polynomial() - net.hilbert_polynomial(), UPoly::constant(1), "HP(hull) - HP(net)");
  auto lf = is_locally_free(net, 2);
  c.truth(!lf.locally_free, "net sheaf is not locally free");
  auto pts = rational_points(R, lf.singular_support);
  c.eq(pts.points.size(), 1u, "singular support size");
  if (pts.points.size() == 1) {
    c.eq(point_string(pts.points[0]), std::string("[1:0:0:0]"), "singular point");
    c.eq(pts.residual, 0, "non-rational residual");
    c.truth(tangent_plane(*R, P.F[0], pts.points[0].coords) == parse_poly("x3", *R), "tangent plane = x3");
  }
}

void criterion2(Checker& c) {
  auto R = p3();
  auto E = net_log_tangent(pair(R, {"x3"}, {kQuadric}));
  std::vector<Vec<Q>> Ip;
  for (auto& f : polys(*R, {"x1", "x2"})) Ip.push_back(Vec<Q>::from_poly(f, 0));
  auto ref = direct_sum(PresentedModule<Q>::image(R, FreeModule::uniform(1, 1), Ip, polys(*R, {"x3"})),
                        PresentedModule<Q>::free(R, FreeModule::uniform(1, 0), polys(*R, {"x3"})));
  c.truth(E.hilbert(-3, 10) == ref.hilbert(-3, 10), "HilbertData equals that of I_p(1) + O on the plane");
  UPoly want = binomial_poly(3, 2) - UPoly::constant(1) + binomial_poly(2, 2);
  c.eq(E.hilbert_polynomial(), want, "HP");
}

void criterion3(Checker& c) {
  auto R = p3();
  auto P = pair(R, {kFermat}, {"x3"});
  auto s = section_singularities(R, P.F[0], P.G[0]);
  c.truth(s.r0_length && *s.r0_length == 8, "l(R0) = 8");
  c.truth(s.points.empty() && s.degree == 0, "R is empty");
  c.eq(s.label, std::string("smooth"), "label");
  auto E = net_log_tangent(P);
  c.eq(E.hilbert_polynomial(), parse_hp("3*t^2+3*t-7"), "HP");
  ChernOptions co;
  co.c1_squared = 0;
  auto rep = chern_report(E, SurfaceData::cubic(), co);
  c.truth(rep.c1_dot_H == 0 && rep.c2 && *rep.c2 == 9, "(c1.H, c2) = (0, 9)");
  c.truth(rep.expected_moduli_dim && *rep.expected_moduli_dim == 33, "expected moduli dimension 33");
  auto lc = log_character_test(E);
  c.eq(lc.h0_E1, 3, "h0(E(1))");
  c.truth(lc.globally_generated, "E(1) globally generated");
  c.eq(Cohomology<Q>(tangent_sheaf(P)).h(0, 0), 0, "h0(T_S)");
}

void criterion4(Checker& c) {
  auto R = p3();
  const std::vector<std::pair<std::vector<long>, std::string>> want = {
      {{1}, "a"}, {{2}, "b"}, {{1, 1}, "c1"}, {{3}, "c2"}, {{1, 1, 1}, "d1"}, {{4}, "d2"}};
  const auto& models = cubic_section_models();
  c.eq(models.size(), want.size(), "model count");
  auto h = parse_poly("x3", *R);
  for (std::size_t i = 0; i < models.size() && i < want.size(); ++i) {
    auto F = smooth_extension(R, parse_poly(models[i].g, *R), h);
    c.truth(is_smooth_hypersurface(R, F), models[i].name + ": F is smooth");
    auto s = section_singularities(R, F, h);
    c.eq(s.multiplicities, want[i].first, models[i].name + " Milnor numbers");
    c.eq(s.label, want[i].second, models[i].name + " label");
  }
}

void criterion5(Checker& c) {
  auto R = p3();
  auto line = projective_line<Q>({});
  auto X = polys(*R, {kFermat});
  auto L = make_rational_curve<Q>("L", line, polys(*line, {"s", "-s", "t", "-t"}), X, polys(*R, {"x3"}));
  c.eq(restrict_to_curve(reflexive_log_tangent(pair(R, {kFermat}, {"x3"})), L), SplittingType{{1, -1}},
       "line not in D");
  auto Lin = make_rational_curve<Q>("L", line, L.forms, X, polys(*R, {"x0+x1"}));
  c.truth(Lin.in_D, "line lies in D");
  c.eq(restrict_to_curve(reflexive_log_tangent(pair(R, {kFermat}, {"x0+x1"})), Lin), SplittingType{{0, 0}},
       "line in D");
  auto refl = reflexive_log_tangent(pair(R, {kQuadric}, {"x3"}));
  for (char fam : {'A', 'B'})
    c.eq(restrict_to_curve(refl, quadric_ruling(line, fam, R->scalar(2), R->scalar(5))), SplittingType{{1, 0}},
         std::string("ruling ") + fam);
}

void criterion6(Checker& c) {
  auto R = p3();
  ScanOptions so;
  so.lo = -3;
  so.hi = 3;
  for (auto H : {"x3", "x0+2*x1+3*x2+5*x3"}) {
    auto v = gieseker_scan_quadric(net_log_tangent(pair(R, {kQuadric}, {H})), so);
    c.eq(v.verdict, std::string("stable-certified-on-window"), std::string("verdict for H = ") + H);
    if (std::string(H) == "x3") {
      bool found = false;
      for (auto& cell : v.cells)
        if (cell.a == 1 && cell.b == 0) {
          found = true;
          c.truth(cell.z && *cell.z == 1, "class (1,0) has |Z| = 1");
          c.eq(cell.P_F, parse_hp("t^2+3*t+1"), "P_F for class (1,0)");
        }
      c.truth(found, "class (1,0) scanned");
    }
  }
}

// Random smooth pairs: diagonal forms plus sparse perturbations.
std::vector<CIPair<Q>> random_pairs(const RingPtr<Q>& R, int d, int count, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), unit(1, 3);
  auto mons = R->monomials_of_degree(d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::vector<CIPair<Q>> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 200; ++attempt) {
    Poly<Q> F;
    for (int i = 0; i < 4; ++i) {
      Poly<Q> xi = R->var(i);
      Poly<Q> p = R->constant(R->scalar(unit(rng)));
      for (int e = 0; e < d; ++e) p *= xi;
      F = F + p;
    }
    for (int k = 0; k < 3; ++k) F = F + Poly<Q>::monomial(mons[pick(rng)], R->scalar(coef(rng)));
    Poly<Q> H;
    for (int i = 0; i < 4; ++i) H = H + R->constant(R->scalar(coef(rng))) * R->var(i);
    if (F.is_zero() || H.is_zero()) continue;
    try {
      auto P = make_ci_pair(R, {F}, {H});
      if (!is_reduced_section(P)) continue;
      out.push_back(P);
    } catch (const CheckFailed&) {
    }
  }
  return out;
}

void criterion7(Checker& c) {
  auto R = p3();
  std::mt19937 rng(20240607);
  for (int d : {2, 3}) {
    auto pairs = random_pairs(R, d, 5, rng);
    c.eq(pairs.size(), 5u, "valid random pairs of degree " + std::to_string(d));
    for (auto& P : pairs) {
      const std::string tag = "d=" + std::to_string(d) + " F=" + to_string(P.F[0], *R) + " H=" + to_string(P.G[0], *R);
      auto checks = verify_exactness(P, -2, 8);
      c.truth(checks.size() >= 10, tag + ": all checks ran");
      for (auto& k : checks) c.truth(k.passed, tag + ": " + k.name + " " + k.detail);
    }
  }
}

Poly<Q> random_form(const PolyRing<Q>& R, int deg, int terms, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  auto mons = R.monomials_of_degree(deg);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  Poly<Q> f;
  for (int k = 0; k < terms; ++k) f = f + Poly<Q>::monomial(mons[pick(rng)], R.scalar(coef(rng)));
  return f;
}

void criterion8(Checker& c) {
  std::mt19937 rng(8128);
  std::uniform_int_distribution<int> nv(2, 4), rk(1, 2), ng(1, 3), dg(1, 4), nt(1, 4), tw(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> names;
    const int n = nv(rng);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto R = ring(names);
    const int r = rk(rng);
    std::vector<int> twists;
    for (int k = 0; k < r; ++k) twists.push_back(tw(rng));
    FreeModule F(twists);
    // Homogeneous generators: pick a degree, fill each component in its own degree.
    std::vector<Vec<Q>> gens;
    const int g = ng(rng);
    for (int j = 0; j < g; ++j) {
      int D = -*std::min_element(twists.begin(), twists.end()) + dg(rng) - 1;
      Vec<Q> v;
      for (int k = 0; k < r; ++k) {
        int dk = D - F.generator_degree(k);
        if (dk < 0 || dk > 4) continue;
        v = v + Vec<Q>::from_poly(random_form(*R, dk, nt(rng), rng), k);
      }
      if (!v.is_zero()) gens.push_back(v);
    }
    if (gens.empty()) gens.push_back(Vec<Q>::from_poly(random_form(*R, 2, 2, rng), 0));
    std::vector<Poly<Q>> quotient;
    if (trial % 3 == 0) quotient.push_back(random_form(*R, 2, 3, rng));
    const std::string tag = "trial " + std::to_string(trial);
    auto gb = groebner(SubmoduleBasis<Q>(F, gens), quotient);
    auto hs = hilbert_series_of_quotient(gb, n);
    auto phi = GradedMap<Q>(R, [&] {
      std::vector<int> src;
      for (auto& v : gens) src.push_back(-v.degree(F));
      return FreeModule(src);
    }(), F, gens);
    auto ker = kernel_of_map(phi, quotient);
    for (int t = 0; t <= 8; ++t) {
      c.eq(hs.value(t), mpz_class(macaulay_hf(*R, F, gens, quotient, t)), tag + " HF(" + std::to_string(t) + ")");
      long kdim = macaulay_hf(*R, phi.source, {}, quotient, t) - macaulay_hf(*R, phi.source, ker.gens, quotient, t);
      c.eq(kdim, macaulay_kernel_dim(phi, quotient, t), tag + " kernel dim(" + std::to_string(t) + ")");
      // membership: a combination of generators and a random vector
      Vec<Q> member, other;
      for (auto& v : gens) {
        int e = t - v.degree(F);
        if (e < 0) continue;
        member = member + v.mul_poly(random_form(*R, e, 2, rng));
      }
      for (int k = 0; k < r; ++k) {
        int e = t - F.generator_degree(k);
        if (e >= 0) other = other + Vec<Q>::from_poly(random_form(*R, e, 2, rng), k);
      }
      for (auto* v : {&member, &other}) {
        if (v->is_zero()) continue;
        bool engine = normal_form(*v, gb).is_zero();
        c.truth(engine == macaulay_member(*R, F, gens, quotient, *v), tag + " membership in degree " + std::to_string(t));
      }
      c.truth(member.is_zero() || normal_form(member, gb).is_zero(), tag + " generator combination is a member");
    }
  }
}

void criterion9(Checker& c) {
  long checked = 0, boundary = 0, interior = 0;
  for (long N = 3; N <= 6; ++N)
    for (long d = 2; d <= 5; ++d)
      for (long p = 1; p < N - 1; ++p)
        for (long m = p * (1 - d) - 5; m <= p * (1 - d); ++m) {
          ++checked;
          auto v = wedge_h0_formula(N, d, p, m);
          if (v == 0) continue;
          if (m == p * (1 - d) && v == binomial(N, p)) ++boundary;
          else ++interior;
          c.failures.push_back("N=" + std::to_string(N) + " d=" + std::to_string(d) + " p=" + std::to_string(p) +
                               " m=" + std::to_string(m) + " gives " + v.get_str());
        }
  if (checked == 0) c.failures.push_back("no cases checked");
  if (!c.failures.empty())
    c.failures.insert(c.failures.begin(), std::to_string(checked) + " cases, " + std::to_string(boundary) +
                                              " nonzero at m = p(1-d) with value C(N,p), " +
                                              std::to_string(interior) + " nonzero for m < p(1-d)");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"quadric pipeline", criterion1},
      {"swapped pair on the plane", criterion2},
      {"Fermat cubic smooth section", criterion3},
      {"singular section suite", criterion4},
      {"splitting types", criterion5},
      {"Gieseker scan on the quadric", criterion6},
      {"exactness on random pairs", criterion7},
      {"engine vs Macaulay oracle", criterion8},
      {"wedge formula vanishing", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << s << " s)\n";
    const std::size_t shown = std::min<std::size_t>(c.failures.size(), 12);
    for (std::size_t k = 0; k < shown; ++k) std::cout << "    " << c.failures[k] << "\n";
    if (c.failures.size() > shown) std::cout << "    ... " << c.failures.size() - shown << " more\n";
  }
  std::cout << (failed ? std::to_string(failed) + " of 9 criteria failed" : std::string("all 9 criteria passed"))
            << "\n";
  return failed ? 1 : 0;
}
