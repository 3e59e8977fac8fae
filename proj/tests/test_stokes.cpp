#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "pcv/stokes.hpp"

using namespace pcv;

namespace {
GaussianRational Q(long n, long d = 1) {
  return GaussianRational(mpq_class(n, d));
}
RatExpr V(Sym s) { return RatExpr::var(s); }

// Apply the half-monodromy move g(i, j) to a trace triple with its theta
// vector: X_i -> X_j, X_j -> X_i - F_{X_i}, th_i <-> th_j.
void apply_move(int i, int j, std::array<GaussianRational, 3>& X,
                std::array<GaussianRational, 4>& th) {
  int k = 3 - i - j;
  GaussianRational Fi = X[j] * X[k] + Q(2) * X[i] - th[i];
  GaussianRational Xi = X[i];
  X[i] = X[j];
  X[j] = Xi - Fi;
  std::swap(th[i], th[j]);
}

std::array<GaussianRational, 4> theta_of(const StokesDataVI& d) {
  return theta_from_a({d.e0 + d.e0.inverse(), d.et + d.et.inverse(),
                       d.e1 + d.e1.inverse(), ainf_from_stokes(d)});
}

GaussianRational fricke_at(const std::array<GaussianRational, 3>& X,
                           const std::array<GaussianRational, 4>& th) {
  return X[0] * X[1] * X[2] + X[0] * X[0] + X[1] * X[1] + X[2] * X[2] -
         th[0] * X[0] - th[1] * X[1] - th[2] * X[2] + th[3];
}
}  // namespace

TEST_CASE("formal traces and determinants of the monodromy matrices") {
  StokesSym s = stokes_sym();
  auto m = monodromy_from_stokes(s);
  CHECK(identity_equal_exact(m.M0.trace(), s.e0 * s.e0 + RatExpr(2)));
  CHECK(identity_equal_exact(m.Mt.trace(), s.et * s.et + RatExpr(2)));
  CHECK(identity_equal_exact(m.M1.trace(), s.e1 * s.e1 + RatExpr(2)));
  CHECK(identity_equal_exact(m.M0.det(), s.e0 * s.e0));
  CHECK(identity_equal_exact(m.Mt.det(), s.et * s.et));
  CHECK(identity_equal_exact(m.M1.det(), s.e1 * s.e1));
  RatExpr P = s.e0 * s.et * s.e1;
  CHECK(identity_equal_exact(m.Minf_inv.det(), P * P));
  // Evaluating the characteristic polynomial at 1 ties the admissibility
  // combination to det(Minf_inv - I).
  Mat3X diff = m.Minf_inv - Mat3X::identity();
  CHECK(identity_equal_exact(diff.det(),
                             RatExpr(0L) -
                                 (RatExpr(1L) - m.E + m.Eprime - P * P)));
}

TEST_CASE("trace coordinates: vanishing coefficients give eigenvalue sums") {
  StokesDataVI d{};
  d.e0 = Q(2);
  d.et = Q(3);
  d.e1 = Q(5);
  auto X = traces_from_stokes(d);
  CHECK(X[0] == Q(3, 5) + Q(5, 3));
  CHECK(X[1] == Q(2, 5) + Q(5, 2));
  CHECK(X[2] == Q(2, 3) + Q(3, 2));
}

TEST_CASE("diagonal conjugation fixes invariants, traces and E, E'") {
  StokesSym s = stokes_sym();
  RatExpr d0 = V(Sym::d0), dt = V(Sym::dt), d1 = V(Sym::d1);
  StokesSym g = s;
  g.s0t = s.s0t * d0 / dt;
  g.st0 = s.st0 * dt / d0;
  g.st1 = s.st1 * dt / d1;
  g.s1t = s.s1t * d1 / dt;
  g.s10 = s.s10 * d1 / d0;
  g.s01 = s.s01 * d0 / d1;
  auto iv = stokes_invariants(s), ig = stokes_invariants(g);
  for (int k = 0; k < 5; ++k) {
    CAPTURE(k);
    CHECK(identity_equal_exact(iv[k], ig[k]));
  }
  // The triple products are determined by the pair products.
  CHECK(identity_equal_exact(iv[0] * iv[1] * iv[2], iv[3] * iv[4]));
  auto Xs = traces_from_stokes(s), Xg = traces_from_stokes(g);
  for (int k = 0; k < 3; ++k)
    CHECK(identity_equal_exact(Xs[k], Xg[k]));
  auto ms = monodromy_from_stokes(s), mg = monodromy_from_stokes(g);
  CHECK(identity_equal_exact(ms.E, mg.E));
  CHECK(identity_equal_exact(ms.Eprime, mg.Eprime));
}

TEST_CASE("admissible data: constraint, nonzero coefficients, surface") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    CAPTURE(seed);
    StokesDataVI d = make_admissible_stokes(seed);
    CHECK(admissibility_residual(d) == Q(0));
    for (const GaussianRational* s :
         {&d.s0t, &d.st0, &d.st1, &d.s1t, &d.s10, &d.s01})
      CHECK(!s->is_zero());
    // The constraint is affine-linear in s0t.
    StokesDataVI d0 = d, d1 = d, d2 = d;
    d0.s0t = Q(0);
    d1.s0t = Q(1);
    d2.s0t = Q(2);
    GaussianRational c0 = admissibility_residual(d0);
    GaussianRational c1 = admissibility_residual(d1);
    CHECK(admissibility_residual(d2) == c0 + Q(2) * (c1 - c0));
    // The trace triple lies on the cubic surface cut out by the data.
    auto X = traces_from_stokes(d);
    CHECK(fricke_at(X, theta_of(d)) == Q(0));
  }
}

TEST_CASE("braid moves on the data match the surface moves on traces") {
  for (uint64_t seed = 11; seed <= 13; ++seed) {
    CAPTURE(seed);
    StokesDataVI d = make_admissible_stokes(seed);
    auto m = monodromy_from_stokes(d);
    auto X = traces_from_stokes(d);
    auto th = theta_of(d);

    SUBCASE("first move") {
      StokesDataVI b = braid_on_stokes(StokesBraid::b0t, d);
      auto Xexp = X;
      auto thexp = th;
      apply_move(0, 1, Xexp, thexp);
      CHECK(traces_from_stokes(b) == Xexp);
      CHECK(b.e0 == d.et);
      CHECK(b.et == d.e0);
      CHECK(b.e1 == d.e1);
      // Admissibility and the monodromy at infinity survive the move.
      CHECK(admissibility_residual(b) == Q(0));
      auto mb = monodromy_from_stokes(b);
      CHECK(mb.E == m.E);
      CHECK(mb.Eprime == m.Eprime);
    }
    SUBCASE("second move") {
      StokesDataVI b = braid_on_stokes(StokesBraid::bt1, d);
      auto Xexp = X;
      auto thexp = th;
      apply_move(1, 2, Xexp, thexp);
      CHECK(traces_from_stokes(b) == Xexp);
      CHECK(b.e0 == d.e0);
      CHECK(b.et == d.e1);
      CHECK(b.e1 == d.et);
      CHECK(admissibility_residual(b) == Q(0));
    }
    SUBCASE("squared move") {
      StokesDataVI b2 =
          braid_on_stokes(StokesBraid::b0t, braid_on_stokes(StokesBraid::b0t, d));
      auto Xexp = X;
      auto thexp = th;
      apply_move(0, 1, Xexp, thexp);
      apply_move(0, 1, Xexp, thexp);
      CHECK(traces_from_stokes(b2) == Xexp);
      CHECK(b2.e0 == d.e0);
      CHECK(b2.et == d.et);
      CHECK(thexp == th);  // parameters return after the square
    }
  }
}

TEST_CASE("confluent data lands on the degenerate surface (exact)") {
  for (uint64_t seed = 21; seed <= 23; ++seed) {
    CAPTURE(seed);
    StokesDataVI d = make_admissible_stokes(seed);
    ConfluentStokesResult r = confluent_stokes(d);
    auto th = theta_of(d);
    auto X = traces_from_stokes(d);
    CHECK(r.P[0] == X[0]);
    // Degenerate-surface invariants out of a_0, the merged parameter and
    // a_inf (all rational here even though e_inf itself is not).
    GaussianRational a0 = d.e0 + d.e0.inverse();
    GaussianRational ainf = ainf_from_stokes(d);
    GaussianRational t = -d.et * d.e1;  // merged parameter
    std::array<GaussianRational, 4> tht = {
        -t, ainf - t * a0, a0 - t * ainf, Q(1) - t * a0 * ainf + t * t};
    const GaussianRational &X0 = r.P[0], &Wt = r.P[1], &U1 = r.P[2];
    GaussianRational Ft = X0 * Wt * U1 + Wt * Wt + U1 * U1 - tht[0] * X0 -
                          tht[1] * Wt - tht[2] * U1 + tht[3];
    CHECK(Ft == Q(0));
    // The coordinates agree with the inverse coordinate change applied to
    // the trace triple (the generic-denominator branch).
    GaussianRational den = X0 - d.et / d.e1 - d.e1 / d.et;
    REQUIRE(!den.is_zero());
    GaussianRational F1 = X[0] * X[1] + Q(2) * X[2] - th[2];
    CHECK(U1 == -(d.et * X[1] + d.e1 * X[2] - tht[1]) / den);
    CHECK(Wt ==
          -(d.e1 * X[1] + d.et * X[2] - tht[2] - d.et * F1) / den);
    // Closed forms for the outer trace and principal-minor sum.
    GaussianRational i = GaussianRational::i();
    auto om = assemble_outer_monodromy(r.outer, i);
    GaussianRational q = d.et * d.e1, e02 = d.e0 * d.e0;
    CHECK(om.E == q * X0 + d.e0 * U1 + e02 * r.outer.s0t * r.outer.st0);
    CHECK(om.Eprime == d.e0 * q * X0 * U1 + d.e0 * q * Wt +
                           i * e02 * q * r.outer.st0 * r.outer.s01);
  }
  // A vanishing s_1t puts the data on the singular line.
  StokesDataVI d = make_admissible_stokes(31);
  d.s1t = Q(0);
  CHECK_THROWS_AS(confluent_stokes(d), DomainError);
}

TEST_CASE("outer monodromy assembly: closed-form entries") {
  OuterSym o = outer_sym();
  RatExpr i{GaussianRational::i()};
  auto om = assemble_outer_monodromy(o, i);
  RatExpr e02 = o.e0 * o.e0, q = o.et * o.e1;
  RatExpr want[3][3] = {
      {e02, e02 * o.s0t, e02 * o.s01},
      {e02 * o.st0, q * o.X0 + e02 * o.st0 * o.s0t,
       RatExpr(0L) - i * q + e02 * o.st0 * o.s01},
      {e02 * o.s10, RatExpr(0L) - i * q + e02 * o.s10 * o.s0t,
       e02 * o.s10 * o.s01}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(identity_equal_exact(om.Minf_inv(r, c), want[r][c]));
    }
}

TEST_CASE("outer monodromy degenerates to the formal eigenvalues") {
  OuterStokesData o{};
  o.e0 = Q(2);
  o.et = Q(3);
  o.e1 = Q(5);
  o.X0 = Q(3, 5) + Q(5, 3);
  auto om = assemble_outer_monodromy(o, GaussianRational::i());
  for (GaussianRational lam : {Q(4), Q(9), Q(25)}) {
    Mat3Q shifted = om.Minf_inv - Mat3Q::diag(lam, lam, lam);
    CAPTURE(lam.to_string());
    CHECK(shifted.det() == Q(0));
  }
}

TEST_CASE("eigenvalue at infinity from the trace data") {
  // a_inf = 5/2: roots 2 and 1/2 of e^2 - a_inf e + 1.
  C E(3.5), P(1.0);
  CHECK(std::abs(einf_from_stokes_num(E, P) - C(2)) < 1e-12);
  CHECK(std::abs(einf_from_stokes_num(E, P, C(0.4)) - C(0.5)) < 1e-12);
}

TEST_CASE("rank-two merging demonstration") {
  LinearConfluenceDemo demo;
  demo.lambda0 = C(0.7, 0.2);
  demo.Lambda1 = {C(0.31, -0.11), C(-0.05, 0.4)};
  demo.eps0 = C(0.23, 0.06);
  demo.SL = Mat2C::identity();
  demo.SL(0, 1) = C(1.2, -0.7);
  demo.SR = Mat2C::identity();
  demo.SR(1, 0) = C(-0.4, 0.9);
  auto r0 = linear_confluence_demo(demo, 0);
  Mat2C Ek = Mat2C::diag(r0.kappa, 1.0 / r0.kappa);
  for (int n : {0, 3, 17}) {
    auto r = linear_confluence_demo(demo, n);
    CAPTURE(n);
    // The formal factor is constant along the sequence and equals the
    // diagonal built from kappa.
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        CHECK(std::abs(r.N0n(a, b) - r0.N0n(a, b)) < 1e-12);
        CHECK(std::abs(r.N0n(a, b) - Ek(a, b)) < 1e-12);
      }
    // Total monodromy of the pair matches the merged pair's product.
    Mat2C lhs = r.MRn * r.MLn, rhs = r.wildR * r.wildL;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        CHECK(std::abs(lhs(a, b) - rhs(a, b)) < 1e-12);
  }
  LinearConfluenceDemo bad = demo;
  bad.eps0 = C(0);
  CHECK_THROWS_AS(linear_confluence_demo(bad, 1), DomainError);
}

TEST_CASE("serialization round trip") {
  StokesDataVI d = make_admissible_stokes(7);
  auto back = stokes_from_json(stokes_to_json(d));
  REQUIRE(back.has_value());
  CHECK(back->s0t == d.s0t);
  CHECK(back->st0 == d.st0);
  CHECK(back->st1 == d.st1);
  CHECK(back->s1t == d.s1t);
  CHECK(back->s10 == d.s10);
  CHECK(back->s01 == d.s01);
  CHECK(back->e0 == d.e0);
  CHECK(back->et == d.et);
  CHECK(back->e1 == d.e1);
  CHECK(!stokes_from_json("{"));
  CHECK(!stokes_from_json("{}"));
  CHECK(!stokes_from_json(R"({"s":{"0t":"bogus"},"e":{}})"));
  CHECK(!stokes_from_json(R"({"s":{"0t":5},"e":{}})"));
}
