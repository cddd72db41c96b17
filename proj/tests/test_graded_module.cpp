#include <gtest/gtest.h>

#include "netlog/exact_algebra.hpp"
#include "netlog/graded.hpp"
#include "netlog/groebner.hpp"

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

PresentedModule<Q> quotient_ring(const RingPtr<Q>& R, std::vector<std::string> gens) {
  return PresentedModule<Q>::free(R, FreeModule::uniform(1, 0), polys(*R, gens));
}

// Cyclic S-module S/J presented as a cokernel.
PresentedModule<Q> cyclic(const RingPtr<Q>& R, std::vector<std::string> gens) {
  std::vector<Vec<Q>> rels;
  for (auto& f : polys(*R, gens)) rels.push_back(Vec<Q>::from_poly(f, 0));
  return PresentedModule<Q>(R, FreeModule::uniform(1, 0), std::nullopt, rels);
}

UPoly hp(const std::string& s) { return parse_hp(s); }

// χ(O_Q(a, b)) = (a+1)(b+1) on the smooth quadric surface.
mpz_class chi_quadric(long a, long b) { return mpz_class((a + 1) * (b + 1)); }

// Quadric Q = V(x0x3 - x1x2) with the tangent hyperplane H = V(x3) at [1:0:0:0].
struct QuadricTangent {
  RingPtr<Q> R = p3();
  Poly<Q> F = parse_poly("x0*x3-x1*x2", *R);
  GradedMap<Q> xi = GradedMap<Q>::from_rows(R, FreeModule::uniform(4, 1), FreeModule({2, 1}),
                                            {polys(*R, {"x3", "-x2", "-x1", "x0"}), polys(*R, {"0", "0", "0", "1"})});
  // ker(ξ) over S, then tensored with O_Q.
  PresentedModule<Q> ambient_kernel() const {
    auto K = kernel_of_map(xi);
    return PresentedModule<Q>::image(R, xi.source, K.gens);
  }
  PresentedModule<Q> restricted() const { return ambient_kernel().restrict({F}, true); }
};

}  // namespace

TEST(Hilbert, PolynomialRing) {
  auto R = p3();
  auto S = PresentedModule<Q>::free(R, FreeModule::uniform(1, 0));
  EXPECT_EQ(S.hilbert_polynomial(), binomial_poly(3, 3));
  for (int t = -3; t <= 6; ++t) EXPECT_EQ(S.hf(t), binomial(t + 3, 3)) << t;
}

TEST(Hilbert, ZeroDimensionalComplete) {
  auto R = p3();
  auto M = quotient_ring(R, {"x0^2", "x1^2", "x2^2"});
  EXPECT_EQ(M.hilbert_polynomial(), UPoly::constant(8));
  auto d = M.hilbert(0, 8);
  EXPECT_TRUE(d.window_confirms);
  EXPECT_EQ(d.agreement_index, 3);
  for (int t = d.agreement_index; t <= 8; ++t) EXPECT_EQ(d.at(t), 8);
  EXPECT_EQ(d.at(2), 7);
}

TEST(Hilbert, AgreementIndexAndWindowFlag) {
  auto R = ring({"x0", "x1", "x2"});
  auto M = quotient_ring(R, {"x0^3"});
  auto d = M.hilbert(-2, 5);
  EXPECT_EQ(d.polynomial, hp("3*t"));
  for (int t = d.agreement_index; t <= 5; ++t) EXPECT_EQ(d.at(t), eval_integer(d.polynomial, t));
  EXPECT_NE(d.at(d.agreement_index - 1), eval_integer(d.polynomial, d.agreement_index - 1));
  auto small = M.hilbert(-5, -4);
  EXPECT_FALSE(small.window_confirms);
}

TEST(Hilbert, TwistShiftsTheFunction) {
  auto R = p3();
  auto M = quotient_ring(R, {"x0*x3-x1*x2"});
  auto M2 = M.twist(2);
  for (int t = -2; t <= 5; ++t) EXPECT_EQ(M2.hf(t), M.hf(t + 2));
}

TEST(Hilbert, HpStringRoundTrip) {
  UPoly p = hp("2*t^2+6*t+3");
  EXPECT_EQ(hp_string(p), "2*t^2+6*t+3");
  EXPECT_EQ(hp_string(hp("3*t^2+3*t-7")), "3*t^2+3*t-7");
  EXPECT_EQ(hp_string(UPoly()), "0");
}

TEST(Restrict, FreeRestrictsToFree) {
  auto R = p3();
  auto F = parse_poly("x0*x3-x1*x2", *R);
  auto M = PresentedModule<Q>::free(R, FreeModule::uniform(4, 1)).restrict({F}, true);
  auto OQ = quotient_ring(R, {"x0*x3-x1*x2"});
  for (int t = -2; t <= 5; ++t) EXPECT_EQ(M.hf(t), 4 * OQ.hf(t + 1));
}

TEST(Restrict, CyclicIdempotent) {
  auto R = p3();
  auto M = cyclic(R, {"x0"}).restrict(polys(*R, {"x0"}));
  auto N = cyclic(R, {"x0"});
  for (int t = -1; t <= 5; ++t) EXPECT_EQ(M.hf(t), N.hf(t));
}

TEST(Resolution, KoszulBetti) {
  auto R = p3();
  auto M = cyclic(R, {"x1", "x2", "x3"});
  auto res = resolve(M);
  ASSERT_EQ(res.length(), 3);
  auto b = res.betti();
  EXPECT_EQ(b[0].at(0), 1);
  EXPECT_EQ(b[1].at(1), 3);
  EXPECT_EQ(b[2].at(2), 3);
  EXPECT_EQ(b[3].at(3), 1);
}

TEST(Resolution, HypersurfaceHasLengthOne) {
  auto R = p3();
  auto res = resolve(quotient_ring(R, {"x0^3+x1^3+x2^3+x3^3"}));
  ASSERT_EQ(res.length(), 1);
  EXPECT_EQ(res.betti()[1].at(3), 1);
}

TEST(Cohomology, ProjectiveSpace) {
  auto R = p3();
  auto S = PresentedModule<Q>::free(R, FreeModule::uniform(1, 0));
  EXPECT_EQ(h0(S, 2), 10);
  EXPECT_EQ(h0(S, -1), 0);
  Cohomology<Q> c(S);
  EXPECT_EQ(c.h(3, -4), 1);
  EXPECT_EQ(c.h(3, -6), 10);
  EXPECT_EQ(c.h(1, 0), 0);
  EXPECT_EQ(c.h(2, -2), 0);
}

TEST(Cohomology, PlaneInsideSpace) {
  auto R = p3();
  Cohomology<Q> c(cyclic(R, {"x0"}));
  EXPECT_EQ(c.h(0, 2), 6);
  EXPECT_EQ(c.h(2, -3), 1);
  EXPECT_EQ(c.h(2, -4), 3);
  EXPECT_EQ(c.h(3, -4), 0);
}

TEST(Cohomology, SaturationCorrectsH0) {
  // M = S/(x0^2, x0x1, x0x2, x0x3): x0 spans a finite-length submodule, so
  // h0 is the plane-section count of S/(x0) once t >= 1.
  auto R = p3();
  auto M = cyclic(R, {"x0^2", "x0*x1", "x0*x2", "x0*x3"});
  EXPECT_EQ(M.hf(1), 4);
  EXPECT_EQ(h0(M, 1), 3);
  EXPECT_EQ(h0(M, 0), 1);
  for (int t = 1; t <= 4; ++t) EXPECT_GE(M.hf(t), h0(M, t));
}

TEST(Cohomology, EulerCharacteristicMatchesPolynomial) {
  QuadricTangent q;
  auto T = torsion_free_quotient(q.restricted());
  Cohomology<Q> c(T);
  auto P = T.hilbert_polynomial();
  for (int t = -3; t <= 2; ++t) EXPECT_EQ(c.chi(t), eval_integer(P, t)) << t;
}

TEST(Duality, DualOfFreeNegatesTwists) {
  auto R = p3();
  auto M = PresentedModule<Q>::free(R, FreeModule({3}));
  auto D = hom_dual(M);
  for (int t = -1; t <= 6; ++t) EXPECT_EQ(D.hf(t), binomial(t - 3 + 3, 3));
}

TEST(Duality, DualOfTorsionIsZero) {
  auto R = p3();
  auto Op = cyclic(R, {"x1", "x2", "x3"});
  EXPECT_TRUE(hom_dual(Op).is_zero());
}

TEST(Duality, TorsionOfFreeIsZero) {
  auto R = p3();
  auto M = PresentedModule<Q>::free(R, FreeModule::uniform(2, 1), polys(*R, {"x0*x3-x1*x2"}));
  EXPECT_TRUE(torsion_submodule(M).is_zero());
}

TEST(Duality, RefusesReducibleRing) {
  auto R = p3();
  auto M = PresentedModule<Q>::free(R, FreeModule::uniform(1, 0), polys(*R, {"x0*x1"}), false);
  EXPECT_THROW(double_dual(M), InputError);
}

TEST(Duality, QuadricTangentSection) {
  QuadricTangent q;
  auto D = duality_data(q.restricted());
  EXPECT_EQ(D.torsion_free.hilbert_polynomial(), hp("2*t^2+6*t+3"));
  EXPECT_EQ(D.double_dual.hilbert_polynomial(), hp("2*t^2+6*t+4"));
  // ker(ξ) sits in O(1)^4 with torsion-free image, so its restriction has no
  // torsion; the length-one defect appears as Tor1(coker ξ, O_Q).
  EXPECT_TRUE(D.torsion.is_zero());
  auto B = PresentedModule<Q>::cokernel(q.xi);
  EXPECT_EQ(tor(B, {q.F}, 1).hilbert_polynomial(), UPoly::constant(1));
  EXPECT_EQ(D.dual.hilbert_polynomial(), hp("2*t^2+2*t"));
  for (long t = 0; t <= 4; ++t) {
    EXPECT_EQ(eval_integer(D.double_dual.hilbert_polynomial(), t), chi_quadric(t + 1, t) + chi_quadric(t, t + 1));
    EXPECT_EQ(eval_integer(D.torsion_free.hilbert_polynomial(), t),
              chi_quadric(t + 1, t) + chi_quadric(t, t + 1) - 1);
    EXPECT_EQ(eval_integer(D.dual.hilbert_polynomial(), t), chi_quadric(t - 1, t) + chi_quadric(t, t - 1));
  }
  // Torsion-free quotient has no torsion; the reflexive hull is idempotent.
  EXPECT_TRUE(torsion_submodule(D.torsion_free).is_zero());
  EXPECT_EQ(double_dual(D.double_dual).hilbert_polynomial(), D.double_dual.hilbert_polynomial());
}

TEST(Duality, HilbertAdditivityOnTorsionSequence) {
  auto R = p3();
  // O_Q(1) ⊕ O_p: torsion O_p, torsion-free part O_Q(1).
  auto M = direct_sum(cyclic(R, {"x0*x3-x1*x2"}).twist(1), cyclic(R, {"x1", "x2", "x3"}))
               .with_ideal(polys(*R, {"x0*x3-x1*x2"}), true);
  auto D = duality_data(M);
  EXPECT_EQ(D.torsion.hilbert_polynomial(), UPoly::constant(1));
  for (int t = -1; t <= 5; ++t) EXPECT_EQ(D.torsion.hf(t) + D.torsion_free.hf(t), M.hf(t)) << t;
}

TEST(Tor, SkyscraperAgainstQuadric) {
  auto R = p3();
  auto Op = cyclic(R, {"x1", "x2", "x3"});
  auto T1 = tor(Op, polys(*R, {"x0*x3-x1*x2"}), 1);
  EXPECT_EQ(T1.hilbert_polynomial(), UPoly::constant(1));
  auto T2 = tor(Op, polys(*R, {"x0*x3-x1*x2"}), 2);
  EXPECT_TRUE(T2.is_zero());
}

TEST(Tor, ZeroIsRestriction) {
  auto R = p3();
  auto M = cyclic(R, {"x1", "x2"});
  auto J = polys(*R, {"x0*x3-x1*x2"});
  auto T0 = tor(M, J, 0);
  auto Rs = M.restrict(J);
  for (int t = 0; t <= 5; ++t) EXPECT_EQ(T0.hf(t), Rs.hf(t));
}

TEST(Tor, FreeHasNoHigherTor) {
  auto R = p3();
  auto M = PresentedModule<Q>::free(R, FreeModule::uniform(3, 1));
  EXPECT_TRUE(tor(M, polys(*R, {"x0^2"}), 1).is_zero());
}

TEST(Fitting, FreeIsLocallyFree) {
  auto R = p3();
  auto M = PresentedModule<Q>::free(R, FreeModule::uniform(2, 1), polys(*R, {"x0*x3-x1*x2"}));
  EXPECT_TRUE(is_locally_free(M, 2).locally_free);
}

TEST(Fitting, QuadricTangentSingularAtContactPoint) {
  QuadricTangent q;
  auto T = torsion_free_quotient(q.restricted());
  auto lf = is_locally_free(T, 2);
  EXPECT_FALSE(lf.locally_free);
  auto pts = rational_points(q.R, lf.singular_support);
  ASSERT_EQ(pts.points.size(), 1u);
  EXPECT_EQ(point_string(pts.points[0]), "[1:0:0:0]");
  EXPECT_EQ(pts.residual, 0);
  // The reflexive hull is locally free.
  EXPECT_TRUE(is_locally_free(double_dual(T), 2).locally_free);
}

TEST(Points, FatPointMultiplicity) {
  auto R = p3();
  auto pts = rational_points(R, polys(*R, {"x0^2", "x1^2", "x2^2"}));
  EXPECT_EQ(pts.degree, 8);
  ASSERT_EQ(pts.points.size(), 1u);
  EXPECT_EQ(point_string(pts.points[0]), "[0:0:0:1]");
  EXPECT_EQ(pts.points[0].multiplicity, 8);
}

TEST(Points, MixedMultiplicitiesAndIrrationalOrbit) {
  auto R = ring({"x0", "x1", "x2"});
  auto pts = rational_points(R, polys(*R, {"x1", "x0^2*(x0-x2)*(x0^2+x2^2)"}));
  EXPECT_EQ(pts.degree, 5);
  ASSERT_EQ(pts.points.size(), 2u);
  long total = 0;
  for (auto& p : pts.points) {
    total += p.multiplicity;
    if (point_string(p) == "[0:0:1]") EXPECT_EQ(p.multiplicity, 2);
    else EXPECT_EQ(point_string(p), "[1:0:1]");
  }
  EXPECT_EQ(total, 3);
  EXPECT_EQ(pts.residual, 2);
}

TEST(Points, SaturateAtPointRemovesOnlyThatPoint) {
  auto R = ring({"x0", "x1", "x2"});
  auto J = polys(*R, {"x1", "x0*(x0-x2)*(x0-2*x2)"});
  auto rest = saturate_at_point(R, J, {Q(1), Q(0), Q(1)});
  EXPECT_EQ(scheme_degree(*R, rest), 2);
  EXPECT_FALSE(vanishes_at(rest, {Q(1), Q(0), Q(1)}));
  EXPECT_TRUE(vanishes_at(rest, {Q(2), Q(0), Q(1)}));
}

TEST(Chern, CubicSurfaceValues) {
  auto r = chern_from_polynomial(hp("3*t^2+3*t-7"), SurfaceData::cubic(), mpz_class(0));
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.c1_dot_H, 0);
  ASSERT_TRUE(r.c2);
  EXPECT_EQ(*r.c2, 9);
  ASSERT_TRUE(r.expected_moduli_dim);
  EXPECT_EQ(*r.expected_moduli_dim, 33);
}

TEST(Chern, QuadricTangentValues) {
  auto r = chern_from_polynomial(hp("2*t^2+6*t+3"), SurfaceData::quadric(), mpz_class(2));
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.c1_dot_H, 2);
  ASSERT_TRUE(r.c2);
  EXPECT_EQ(*r.c2, 2);
  EXPECT_FALSE(r.expected_moduli_dim);
}

TEST(Chern, StructureSheafOfCubic) {
  auto R = p3();
  auto O = quotient_ring(R, {"x0^3+x1^3+x2^3+x3^3"});
  UPoly P = binomial_poly(3, 3) - binomial_poly(0, 3);
  EXPECT_EQ(O.hilbert_polynomial(), P);
  auto r = chern_from_polynomial(P, SurfaceData::cubic(), mpz_class(0));
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.c1_dot_H, 0);
  EXPECT_EQ(*r.c2, 0);
}

TEST(Chern, WithoutC1SquaredReportsCombination) {
  auto r = chern_from_polynomial(hp("2*t^2+6*t+3"), SurfaceData::quadric());
  EXPECT_FALSE(r.c2);
  EXPECT_EQ(r.c1sq_minus_2c2, -2);
}

TEST(Chern, InconsistentLeadingCoefficient) {
  EXPECT_THROW(chern_from_polynomial(hp("t^2+t+1"), SurfaceData::cubic()), CheckFailed);
}

TEST(Chern, ReportOnModule) {
  QuadricTangent q;
  ChernOptions o;
  o.c1_squared = 2;
  o.h_requests = {{0, 0}, {1, 0}, {2, 0}, {0, -1}};
  auto T = torsion_free_quotient(q.restricted());
  auto r = chern_report(T, SurfaceData::quadric(), o);
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.c1_dot_H, 2);
  EXPECT_EQ(*r.c2, 2);
  ASSERT_TRUE(r.locally_free);
  EXPECT_FALSE(*r.locally_free);
  mpz_class chi0 = r.h_table.at({0, 0}) - r.h_table.at({1, 0}) + r.h_table.at({2, 0});
  EXPECT_EQ(chi0, 3);
  EXPECT_EQ(r.h_table.at({0, -1}), 0);
}

TEST(Serialize, ModuleRoundTrip) {
  QuadricTangent q;
  auto M = q.restricted();
  auto j = module_to_json(M);
  auto back = module_from_json<Q>(j);
  EXPECT_EQ(module_to_json(back).dump(), j.dump());
  EXPECT_EQ(back.hilbert_polynomial(), M.hilbert_polynomial());
  auto img = q.ambient_kernel();
  auto j2 = module_to_json(img);
  EXPECT_EQ(module_to_json(module_from_json<Q>(j2)).dump(), j2.dump());
}

TEST(Serialize, ExtensionFieldRing) {
  auto f = FieldSpec::extension(parse_upoly("w^2+w+1", "w"), "w").make_extension();
  auto R = PolyRing<AlgebraicNumber>::make({"x0", "x1", "x2"}, f);
  auto g = parse_poly("x0+w*x1", *R);
  auto M = PresentedModule<AlgebraicNumber>::free(R, FreeModule::uniform(1, 0), {g});
  auto j = module_to_json(M);
  EXPECT_EQ(module_to_json(module_from_json<AlgebraicNumber>(j)).dump(), j.dump());
  EXPECT_THROW(module_from_json<Q>(j), InputError);
}
