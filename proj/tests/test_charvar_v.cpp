#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "pcv/charvar_v.hpp"

using namespace pcv;

namespace {
GaussianRational Q(long n, long d = 1) {
  return GaussianRational(mpq_class(n, d));
}
RatExpr V(Sym s) { return RatExpr::var(s); }
}  // namespace

TEST_CASE("degenerate invariants: worked example") {
  // a_0 = 0, a_inf = 0, merged parameter 1: invariants (-1, 0, 0, 2).
  auto th = theta_tilde_num(C(0), C(1), C(0));
  CHECK(std::abs(th[0] - C(-1)) < 1e-15);
  CHECK(std::abs(th[1]) < 1e-15);
  CHECK(std::abs(th[2]) < 1e-15);
  CHECK(std::abs(th[3] - C(2)) < 1e-15);
  // Exact counterpart (e_0 = e_inf = i gives a_0 = a_inf = 0).
  GaussianRational i = GaussianRational::i();
  ParamsV p{i, Q(1), i};
  auto the = theta_tilde(p);
  CHECK(the[0] == Q(-1));
  CHECK(the[1] == Q(0));
  CHECK(the[2] == Q(0));
  CHECK(the[3] == Q(2));
  // The surface then passes through (-2, 0, 0).
  FrickeV f = fricke_v_eval({Q(-2), Q(0), Q(0)}, p);
  CHECK(f.F == Q(0));
}

TEST_CASE("the two displays of the invariants agree") {
  // Replacing the merged parameter by -e_t e_1 reproduces the split display.
  SubstMap merge{{Sym::et1, -(V(Sym::et) * V(Sym::e1))}};
  auto a = theta_v_sym();
  auto b = theta_v_sym_et_e1();
  for (int k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(identity_equal_exact(subst(a[k], merge), RatExpr(b[k])));
  }
  CHECK(identity_equal_exact(subst(fricke_v_sym(), merge),
                             RatExpr(fricke_v_sym_et_e1())));
  for (int k = 0; k < 3; ++k)
    CHECK(identity_equal_exact(subst(fricke_v_partial(k), merge),
                               RatExpr(fricke_v_partial_et_e1(k))));
}

TEST_CASE("partials are the derivatives") {
  Sym coords[3] = {Sym::X0, Sym::Wt, Sym::U1};
  for (int k = 0; k < 3; ++k)
    CHECK(fricke_v_partial(k) == fricke_v_sym().derivative(coords[k]));
}

TEST_CASE("all eleven quadratic decompositions reproduce the cubic") {
  const auto& ds = decompositions_v_sym();
  REQUIRE(ds.size() == 11);
  RatExpr F{fricke_v_sym()};
  bool idx[12] = {};
  for (const auto& d : ds) {
    CAPTURE(d.index);
    CHECK(identity_equal_exact(d.A * d.B + d.C * d.D, F));
    REQUIRE(d.index >= 1);
    REQUIRE(d.index <= 11);
    CHECK(!idx[d.index]);
    idx[d.index] = true;
  }
}

TEST_CASE("all 22 lines lie on the surface (symbolic)") {
  const auto& ls = lines_v_sym();
  REQUIRE(ls.size() == 22);
  Sym coords[3] = {Sym::X0, Sym::Wt, Sym::U1};
  for (const auto& L : ls) {
    CAPTURE(L.decomposition);
    CAPTURE(L.branch);
    // The two free coordinates.
    std::vector<Sym> free;
    for (Sym s : coords)
      if (s != L.fixed_var) free.push_back(s);
    REQUIRE(free.size() == 2);
    // Affine coefficients of the linear form.
    SubstMap zero{{free[0], RatExpr(0L)}, {free[1], RatExpr(0L)}};
    SubstMap one0{{free[0], RatExpr(1L)}, {free[1], RatExpr(0L)}};
    SubstMap one1{{free[0], RatExpr(0L)}, {free[1], RatExpr(1L)}};
    RatExpr c0 = subst(L.linear, zero);
    RatExpr c1 = subst(L.linear, one0) - c0;
    RatExpr c2 = subst(L.linear, one1) - c0;
    // Solve the linear form for whichever coordinate it involves.
    REQUIRE((!c1.is_zero() || !c2.is_zero()));
    SubstMap rules{{L.fixed_var, L.fixed_value}};
    if (!c2.is_zero())
      rules[free[1]] = -(c1 * V(free[0]) + c0) / c2;
    else
      rules[free[0]] = -(c2 * V(free[1]) + c0) / c1;
    CHECK(identity_equal_exact(subst(fricke_v_sym(), rules), RatExpr(0L)));
  }
}

TEST_CASE("line catalog at explicit parameter values") {
  ParamsV p{Q(2), Q(3), Q(5)};
  auto ls = lines_v(p);
  REQUIRE(ls.size() == 22);
  for (const auto& L : ls) {
    CAPTURE(L.decomposition);
    CAPTURE(L.branch);
    REQUIRE((!L.c1.is_zero() || !L.c2.is_zero()));
    for (long s = 0; s <= 1; ++s) {
      // A point of the line: fixed coordinate pinned, linear form solved.
      ExactPoint assign;
      assign[L.fixed_var] = L.fixed_value;
      if (!L.c2.is_zero()) {
        assign[L.vars[0]] = Q(s);
        assign[L.vars[1]] = -(L.c1 * Q(s) + L.c0) / L.c2;
      } else {
        assign[L.vars[1]] = Q(s);
        assign[L.vars[0]] = -(L.c2 * Q(s) + L.c0) / L.c1;
      }
      std::array<GaussianRational, 3> P{assign[Sym::X0], assign[Sym::Wt],
                                        assign[Sym::U1]};
      CHECK(fricke_v_eval(P, p).F == Q(0));
    }
  }
}

TEST_CASE("singular points of the degenerate surface") {
  auto check_all_vanish = [](const ParamsV& p) {
    auto ss = singularities_v(p);
    REQUIRE(!ss.empty());
    for (const auto& s : ss) {
      CAPTURE(s.kind);
      FrickeV f = fricke_v_eval(s.P, p);
      CHECK(f.F == Q(0));
      CHECK(f.FX0 == Q(0));
      CHECK(f.FWt == Q(0));
      CHECK(f.FU1 == Q(0));
    }
    return ss;
  };

  SUBCASE("a_0 = 2") {
    ParamsV p{Q(1), Q(3), Q(5)};
    auto ss = check_all_vanish(p);
    bool found = false;
    for (const auto& s : ss)
      if (s.kind == "a_0=+2") {
        found = true;
        // (a_inf, -merged, 1).
        CHECK(s.P == std::array<GaussianRational, 3>{Q(26, 5), Q(-3), Q(1)});
      }
    CHECK(found);
  }
  SUBCASE("a_inf = -2") {
    ParamsV p{Q(3), Q(5), Q(-1)};
    auto ss = check_all_vanish(p);
    bool found = false;
    for (const auto& s : ss)
      if (s.kind == "a_inf=-2") found = true;
    CHECK(found);
  }
  SUBCASE("reducible loci") {
    ParamsV p1{Q(2), Q(-1, 6), Q(3)};  // -et1 * e0 * einf = 1
    auto ss1 = check_all_vanish(p1);
    CHECK(ss1[0].kind.rfind("reducible", 0) == 0);
    CHECK(w_tilde(p1) == Q(0));
    ParamsV p2{Q(2), Q(-6), Q(3)};  // -et1 = e0 * einf
    auto ss2 = check_all_vanish(p2);
    CHECK(ss2[0].kind.rfind("reducible", 0) == 0);
    CHECK(w_tilde(p2) == Q(0));
  }
  SUBCASE("generic parameters: smooth") {
    ParamsV p{Q(2), Q(3), Q(5)};
    CHECK(singularities_v(p).empty());
    CHECK(w_tilde(p) != Q(0));
  }
}

TEST_CASE("degenerate discriminant: the two displayed forms agree") {
  CHECK(identity_equal_exact(w_v_a_form_sym(), w_v_e_form_sym()));
  for (long s = 0; s < 5; ++s) {
    ParamsV p{Q(2 + s), Q(3, 2), Q(5 + s, 3)};
    CHECK(w_tilde(p) == w_tilde_e_form(p));
  }
}

TEST_CASE("sampled points satisfy the cubic") {
  NumParamsV p{C(1.3, 0.2), C(0.7, -0.4), C(0.9, 0.9)};
  auto th = p.theta();
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto P = sample_point_v(th, seed);
    CHECK(std::abs(fricke_v_eval_num(P, th).F) < 1e-9);
  }
}

TEST_CASE("residue pairing: chart agreement, bilinearity, antisymmetry") {
  NumParamsV p{C(1.3, 0.2), C(0.7, -0.4), C(0.9, 0.9)};
  auto th = p.theta();
  auto rng = seeded_rng(515);
  int checked = 0;
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    auto P = sample_point_v(th, seed);
    FrickeVN f = fricke_v_eval_num(P, th);
    std::array<C, 3> g{f.FX0, f.FWt, f.FU1};
    auto tangent = [&] {
      std::array<C, 3> r{rand_disk(rng, 1.0), rand_disk(rng, 1.0),
                         rand_disk(rng, 1.0)};
      return std::array<C, 3>{g[1] * r[2] - g[2] * r[1],
                              g[2] * r[0] - g[0] * r[2],
                              g[0] * r[1] - g[1] * r[0]};
    };
    auto u = tangent(), v = tangent();
    C w0 = symplectic_pair_v_chart(P, th, u, v, 0);
    double scale = std::abs(w0) + 1.0;
    if (std::abs(g[0]) > 1e-6 && std::abs(g[1]) > 1e-6 &&
        std::abs(g[2]) > 1e-6) {
      CHECK(std::abs(w0 - symplectic_pair_v_chart(P, th, u, v, 1)) <
            1e-9 * scale);
      CHECK(std::abs(w0 - symplectic_pair_v_chart(P, th, u, v, 2)) <
            1e-9 * scale);
      ++checked;
    }
    C lam(1.7, -0.3);
    std::array<C, 3> lu{lam * u[0], lam * u[1], lam * u[2]};
    CHECK(std::abs(symplectic_pair_v(P, th, u, v) +
                   symplectic_pair_v(P, th, v, u)) < 1e-9 * scale);
    CHECK(std::abs(symplectic_pair_v(P, th, lu, v) -
                   lam * symplectic_pair_v(P, th, u, v)) < 1e-8 * scale);
  }
  CHECK(checked >= 6);
}

TEST_CASE("numeric partials match finite differences at 20 points") {
  NumParamsV p{C(1.1, 0.3), C(0.8, -0.2), C(0.6, 1.1)};
  auto th = p.theta();
  auto rng = seeded_rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<C, 3> P{rand_disk(rng, 2.0), rand_disk(rng, 2.0),
                       rand_disk(rng, 2.0)};
    FrickeVN f = fricke_v_eval_num(P, th);
    double h = 1e-6;
    for (int k = 0; k < 3; ++k) {
      auto Pp = P, Pm = P;
      Pp[k] += h;
      Pm[k] -= h;
      C fd =
          (fricke_v_eval_num(Pp, th).F - fricke_v_eval_num(Pm, th).F) / (2 * h);
      C part = k == 0 ? f.FX0 : k == 1 ? f.FWt : f.FU1;
      CHECK(std::abs(fd - part) < 1e-6 * (std::abs(part) + 1.0));
    }
  }
}
