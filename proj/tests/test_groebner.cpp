#include <gtest/gtest.h>

#include <random>

#include "netlog/exact_algebra.hpp"
#include "netlog/groebner.hpp"

using namespace netlog;

namespace {

using Q = Rational;

RingPtr<Q> ring(std::vector<std::string> names) { return PolyRing<Q>::make(std::move(names), {}); }

std::vector<Poly<Q>> polys(const PolyRing<Q>& R, std::vector<std::string> s) {
  std::vector<Poly<Q>> out;
  for (auto& x : s) out.push_back(parse_poly(x, R));
  return out;
}

bool ideal_equal(const RingPtr<Q>& R, const std::vector<Poly<Q>>& a, const std::vector<Poly<Q>>& b) {
  (void)R;
  return same_submodule(ideal_basis(a), ideal_basis(b));
}

GradedMap<Q> exq_jacobian(const RingPtr<Q>& R) {
  return GradedMap<Q>::from_rows(R, FreeModule::uniform(4, 1), FreeModule({2, 1}),
                                 {polys(*R, {"x3", "-x2", "-x1", "x0"}), polys(*R, {"0", "0", "0", "1"})});
}

}  // namespace

TEST(Groebner, ClassicExampleContainsCube) {
  auto R = ring({"x0", "x1"});
  auto gb = groebner_ideal(polys(*R, {"x0^2", "x0*x1+x1^2"}));
  bool found = false;
  for (auto& g : gb) found = found || g == parse_poly("x1^3", *R);
  EXPECT_TRUE(found);
  EXPECT_TRUE(is_groebner_basis(ideal_basis(gb)));
}

TEST(Groebner, PrincipalAndZero) {
  auto R = ring({"x0", "x1", "x2"});
  auto f = parse_poly("2*x0^2-x1*x2", *R);
  auto gb = groebner_ideal(std::vector<Poly<Q>>{f});
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], f);
  EXPECT_TRUE(groebner(SubmoduleBasis<Q>(FreeModule::uniform(2, 0), {})).gens.empty());
  EXPECT_TRUE(groebner_ideal(std::vector<Poly<Q>>{Poly<Q>()}).empty());
}

TEST(Groebner, RejectsInhomogeneous) {
  auto R = ring({"x0", "x1"});
  EXPECT_THROW(groebner_ideal(polys(*R, {"x0^2+x1"})), InputError);
}

TEST(Groebner, DegreeCapIsHardError) {
  auto R = ring({"x0", "x1", "x2"});
  GroebnerOptions opt;
  opt.degree_cap = 3;
  EXPECT_THROW(groebner_ideal(polys(*R, {"x0^2-x1*x2", "x0*x1^2-x2^3"}), opt), CapExceeded);
}

TEST(Groebner, NormalFormIdempotentAndMembership) {
  auto R = ring({"x0", "x1", "x2"});
  auto I = polys(*R, {"x0^2-x1*x2", "x1^3-x0*x2^2"});
  auto gb = groebner(ideal_basis(I));
  std::mt19937 rng(5);
  for (int d = 2; d <= 5; ++d)
    for (auto& m : R->monomials_of_degree(d)) {
      Vec<Q> v = Vec<Q>::from_poly(R->monomial(m), 0);
      Vec<Q> nf = normal_form(v, gb);
      EXPECT_EQ(normal_form(nf, gb), nf);
      EXPECT_EQ(nf.is_zero(), macaulay_member(*R, gb.module, ideal_basis(I).gens, {}, v));
      Vec<Q> w = v - nf;
      EXPECT_TRUE(contains(gb, w));
    }
}

TEST(Kernel, QuadricJacobianExample) {
  auto R = ring({"x0", "x1", "x2", "x3"});
  auto phi = exq_jacobian(R);
  auto ker = kernel_of_map(phi);
  for (auto& v : ker.gens) EXPECT_TRUE(phi.apply(v).is_zero());
  std::vector<Vec<Q>> expected = {Vec<Q>::from_components(polys(*R, {"x2", "x3", "0", "0"})),
                                  Vec<Q>::from_components(polys(*R, {"x1", "0", "x3", "0"})),
                                  Vec<Q>::from_components(polys(*R, {"0", "x1", "-x2", "0"}))};
  // Koszul relations of (x3, -x2, -x1) are killed by the matrix.
  for (auto& v : expected) EXPECT_TRUE(phi.apply(v).is_zero());
  SubmoduleBasis<Q> E(phi.source, expected);
  EXPECT_TRUE(same_submodule(ker, E));
  EXPECT_EQ(minimal_generators(ker).gens.size(), 3u);
  for (int t = 0; t <= 5; ++t)
    EXPECT_EQ(macaulay_kernel_dim(phi, {}, t), phi.source.rank() > 0 ? macaulay_kernel_dim(phi, {}, t) : 0);
  for (int t = 0; t <= 5; ++t) {
    long span = macaulay_hf(*R, ker.module, {}, {}, t) - macaulay_hf(*R, ker.module, ker.gens, {}, t);
    EXPECT_EQ(span, macaulay_kernel_dim(phi, {}, t)) << "degree " << t;
  }
}

TEST(Kernel, IdentityAndKoszul) {
  auto R = ring({"x0", "x1"});
  GradedMap<Q> id = GradedMap<Q>::from_rows(R, FreeModule::uniform(2, 0), FreeModule::uniform(2, 0),
                                            {polys(*R, {"1", "0"}), polys(*R, {"0", "1"})});
  EXPECT_TRUE(kernel_of_map(id).is_zero());
  GradedMap<Q> k = GradedMap<Q>::from_rows(R, FreeModule::uniform(2, 1), FreeModule({2}), {polys(*R, {"x0", "x1"})});
  auto ker = kernel_of_map(k);
  ASSERT_EQ(ker.gens.size(), 1u);
  EXPECT_EQ(ker.gens[0], Vec<Q>::from_components(polys(*R, {"x1", "-x0"})));
}

TEST(Kernel, OverQuotientRing) {
  // multiplication by x0 on S/(x0*x1): kernel generated by x1
  auto R = ring({"x0", "x1"});
  GradedMap<Q> m = GradedMap<Q>::from_rows(R, FreeModule({-1}), FreeModule({0}), {polys(*R, {"x0"})});
  auto ker = kernel_of_map(m, polys(*R, {"x0*x1"}));
  SubmoduleBasis<Q> expect(FreeModule({-1}), {Vec<Q>::from_poly(parse_poly("x1", *R), 0)});
  EXPECT_TRUE(same_submodule(ker, expect));
}

TEST(Saturate, Examples) {
  // In two variables the irrelevant ideal is (x0,x1) and the embedded point goes.
  auto R2 = ring({"x0", "x1"});
  EXPECT_TRUE(ideal_equal(R2, saturate_ideal(R2, polys(*R2, {"x0^2", "x0*x1"}), irrelevant_ideal(*R2)),
                          polys(*R2, {"x0"})));
  // In P^2 the embedded point [0:0:1] is a genuine point: saturating by (x0,x1)
  // removes it, the irrelevant ideal does not.
  auto R = ring({"x0", "x1", "x2"});
  auto m = irrelevant_ideal(*R);
  auto M = polys(*R, {"x0^2", "x0*x1"});
  EXPECT_TRUE(ideal_equal(R, saturate_ideal(R, M, polys(*R, {"x0", "x1"})), polys(*R, {"x0"})));
  EXPECT_TRUE(ideal_equal(R, saturate_ideal(R, M, m), M));
  EXPECT_TRUE(ideal_equal(R, saturate_ideal(R, M, polys(*R, {"1"})), M));
  auto Pr = polys(*R, {"x0", "x1"});
  EXPECT_TRUE(ideal_equal(R, saturate_ideal(R, Pr, m), Pr));
  auto fat = polys(*R, {"x0^3", "x0^2*x1", "x1^2*x2", "x2^4"});
  auto once = saturate_ideal(R, fat, m);
  EXPECT_TRUE(ideal_equal(R, saturate_ideal(R, once, m), once));
}

TEST(Saturate, ModuleSaturationMatchesIteratedColon) {
  auto R = ring({"x0", "x1", "x2"});
  FreeModule F = FreeModule::uniform(2, 0);
  SubmoduleBasis<Q> M(F, {Vec<Q>::from_components(polys(*R, {"x0^2", "0"})),
                          Vec<Q>::from_components(polys(*R, {"x0*x1", "x2^2"})),
                          Vec<Q>::from_components(polys(*R, {"0", "x0*x2"}))});
  auto sat = saturate(R, M, irrelevant_ideal(*R));
  auto again = saturate(R, sat, irrelevant_ideal(*R));
  EXPECT_TRUE(same_submodule(sat, again));
  EXPECT_TRUE(contains_all(sat, M));
}

TEST(Colon, Examples) {
  auto R = ring({"x0", "x1"});
  EXPECT_TRUE(ideal_equal(R, colon_ideal(R, polys(*R, {"x0*x1"}), parse_poly("x0", *R)), polys(*R, {"x1"})));
  EXPECT_TRUE(ideal_equal(R, colon_ideal(R, polys(*R, {"x0^2"}), parse_poly("x0", *R)), polys(*R, {"x0"})));
  auto M = polys(*R, {"x0^3", "x0*x1^2"});
  auto C = colon_ideal(R, M, parse_poly("x0+x1", *R));
  EXPECT_TRUE(contains_all(groebner(ideal_basis(C)), ideal_basis(M)));
  EXPECT_THROW(colon_ideal(R, M, Poly<Q>()), InputError);
}

TEST(Syzygies, KoszulAndNonzerodivisor) {
  auto R = ring({"x0", "x1", "x2"});
  auto G = groebner(ideal_basis(polys(*R, {"x0", "x1", "x2"})));
  auto Z = syzygies(R, G);
  EXPECT_EQ(Z.gens.size(), 3u);
  auto g = generator_map(R, G);
  for (auto& z : Z.gens) EXPECT_TRUE(g.apply(z).is_zero());
  auto single = groebner(ideal_basis(polys(*R, {"x0^2+x1*x2"})));
  EXPECT_TRUE(syzygies(R, single).gens.empty());
  SubmoduleBasis<Q> notgb(FreeModule::uniform(1, 0), ideal_basis(polys(*R, {"x0^2", "x0*x1+x1^2"})).gens, false);
  EXPECT_THROW(syzygies(R, notgb), InputError);
}

TEST(Syzygies, JacobianOfSmoothPlaneCubicAgainstMacaulayOracle) {
  auto R = ring({"x0", "x1", "x2"});
  auto f = parse_poly("x0^3+x1^3+x2^3+x0*x1*x2", *R);
  std::vector<Poly<Q>> J;
  for (int i = 0; i < 3; ++i) J.push_back(partial_derivative(f, i));
  auto G = groebner(ideal_basis(J));
  auto Z = syzygies(R, G);
  auto g = generator_map(R, G);
  for (auto& z : Z.gens) EXPECT_TRUE(g.apply(z).is_zero());
  SubmoduleBasis<Q> Zs(g.source, Z.gens);
  // elimination route must agree with Schreyer
  EXPECT_TRUE(same_submodule(Zs, kernel_of_map(g)));
  for (int t = 0; t <= 8; ++t) {
    long span = macaulay_hf(*R, g.source, {}, {}, t) - macaulay_hf(*R, g.source, Z.gens, {}, t);
    EXPECT_EQ(span, macaulay_kernel_dim(g, {}, t)) << "degree " << t;
  }
}

TEST(Intersect, Ideals) {
  auto R = ring({"x0", "x1"});
  auto I = intersect_ideals(R, polys(*R, {"x0"}), polys(*R, {"x1"}));
  EXPECT_TRUE(ideal_equal(R, I, polys(*R, {"x0*x1"})));
}

TEST(LinearAlgebra, CharpolyAndInverse) {
  DenseMatrix<Q> A(2, 2, Q(0));
  A(0, 0) = Q(2);
  A(0, 1) = Q(1);
  A(1, 1) = Q(3);
  auto c = A.charpoly(Q(0), Q(1));  // (x-2)(x-3) = x^2-5x+6
  EXPECT_EQ(c[0], Q(6));
  EXPECT_EQ(c[1], Q(-5));
  EXPECT_EQ(c[2], Q(1));
  auto inv = A.inverse(Q(0), Q(1));
  ASSERT_TRUE(inv.has_value());
  auto I = A * *inv;
  EXPECT_EQ(I(0, 0), Q(1));
  EXPECT_EQ(I(0, 1), Q(0));
}
