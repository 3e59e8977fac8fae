#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "pcv/braid_vi.hpp"

using namespace pcv;

namespace {
GaussianRational Q(long n, long d = 1) {
  return GaussianRational(mpq_class(n, d));
}
}  // namespace

TEST_CASE("surface polynomial is preserved by every generator (exact)") {
  RatExpr F{fricke_vi_sym()};
  for (BraidGen g : {BraidGen::g0t, BraidGen::gt0, BraidGen::gt1,
                     BraidGen::g1t, BraidGen::g10, BraidGen::g01}) {
    CAPTURE(braid_gen_name(g));
    CHECK(identity_equal_exact(subst(fricke_vi_sym(), braid_map(g).rules()),
                               F));
  }
  for (BraidGen g : {BraidGen::g0t, BraidGen::gt1}) {
    CHECK(identity_equal_exact(
        subst(fricke_vi_sym(), explicit_g2_map(g).rules()), F));
  }
}

TEST_CASE("group relations hold (exact / randomized-exact)") {
  RelationReport rep = relations_report();
  for (const auto& [name, ok] : rep.entries) {
    CAPTURE(name);
    CHECK(ok);
  }
  CHECK(rep.all_ok());
}

TEST_CASE("deliberate sign corruption is detected") {
  RelationReport rep = relations_report(/*mutate_g0t_sign=*/true);
  int failures = 0;
  for (const auto& [name, ok] : rep.entries)
    if (!ok) ++failures;
  CHECK(failures >= 1);
  CHECK(!rep.all_ok());
  // The corrupted map really differs from the genuine one.
  RationalMap good = braid_generator(0, 1), bad = braid_generator_mutated(0, 1);
  bool same = true;
  for (Sym s : {Sym::X0, Sym::Xt, Sym::X1})
    same = same && identity_equal_exact(good.rule(s), bad.rule(s));
  CHECK(!same);
}

TEST_CASE("worked example at the symmetric parameter point") {
  // All eigenvalues i: every theta vanishes except th_inf = -4.
  GaussianRational i = GaussianRational::i();
  ParamsVI p{i, i, i, i};
  ExactPoint pt = p.as_point();
  pt[Sym::X0] = Q(2);
  pt[Sym::Xt] = Q(0);
  pt[Sym::X1] = Q(0);
  ExactPoint q = braid_map(BraidGen::g0t).apply_exact(pt);
  CHECK(q[Sym::X0] == Q(0));
  CHECK(q[Sym::Xt] == Q(-2));
  CHECK(q[Sym::X1] == Q(0));
  // Eigenvalues swap.
  CHECK(q[Sym::e0] == pt[Sym::et]);
  CHECK(q[Sym::et] == pt[Sym::e0]);
}

TEST_CASE("braid word parsing") {
  auto w = parse_braid_word("g0t, gt1^-1, g0t^2");
  REQUIRE(w.has_value());
  REQUIRE(w->size() == 3);
  CHECK((*w)[0].gen == BraidGen::g0t);
  CHECK((*w)[0].power == 1);
  CHECK((*w)[1].gen == BraidGen::gt1);
  CHECK((*w)[1].power == -1);
  CHECK((*w)[2].power == 2);
  CHECK(!parse_braid_word("gxy"));
  CHECK(!parse_braid_word("g0t^"));
  // A word followed by its reverse inverse is the identity pointwise.
  ParamsVI p{Q(2), Q(3), Q(5), Q(7)};
  ExactPoint pt = p.as_point();
  pt[Sym::X0] = Q(1, 2);
  pt[Sym::Xt] = Q(-2, 3);
  pt[Sym::X1] = Q(4);
  auto fwd = parse_braid_word("g0t^2, gt1, g10");
  auto back = parse_braid_word("g10^-1, gt1^-1, g0t^-2");
  ExactPoint q = apply_braid_word(*back, apply_braid_word(*fwd, pt));
  CHECK(q == pt);
}

TEST_CASE("squared generators fix the singular points") {
  ParamsVI p{Q(1), Q(3), Q(5), Q(7)};
  auto ss = singularities_vi(p);
  REQUIRE(!ss.empty());
  for (const auto& s : ss) {
    ExactPoint pt = p.as_point();
    pt[Sym::X0] = s.X[0];
    pt[Sym::Xt] = s.X[1];
    pt[Sym::X1] = s.X[2];
    for (BraidGen g : {BraidGen::g0t, BraidGen::gt1}) {
      ExactPoint q = explicit_g2_map(g).apply_exact(pt);
      CHECK(q[Sym::X0] == s.X[0]);
      CHECK(q[Sym::Xt] == s.X[1]);
      CHECK(q[Sym::X1] == s.X[2]);
    }
  }
}

namespace {

// Analytic tangent map of g(i,j): the rules are X_i -> X_j,
// X_j -> X_i - (X_j X_k + 2 X_i - th_i), X_k -> X_k.
std::array<C, 3> braid_tangent(int i, int j, const std::array<C, 3>& X,
                               const std::array<C, 3>& u) {
  int k = 3 - i - j;
  std::array<C, 3> out;
  out[i] = u[j];
  out[j] = u[i] - (u[j] * X[k] + u[k] * X[j] + C(2) * u[i]);
  out[k] = u[k];
  return out;
}

}  // namespace

TEST_CASE("generators preserve the symplectic pairing (numeric)") {
  NumParamsVI p{C(1.3, 0.2), C(0.7, -0.4), C(2.0, 0.1), C(0.9, 0.9)};
  auto th = p.theta();
  auto rng = seeded_rng(4242);
  struct GenCase {
    int i, j;
  };
  for (GenCase gc : {GenCase{0, 1}, GenCase{1, 2}}) {
    // After the move the eigenvalues e_i, e_j swap, which exchanges
    // th_i <-> th_j and fixes the other two invariants.
    auto th2 = th;
    std::swap(th2[gc.i], th2[gc.j]);
    int points = 0;
    for (uint64_t seed = 1; points < 50 && seed < 200; ++seed) {
      auto X = sample_point_vi(th, seed);
      FrickeVIN f = fricke_eval_num(X, th);
      std::array<C, 3> g{f.F0, f.Ft, f.F1};
      if (std::abs(g[0]) < 1e-3 || std::abs(g[1]) < 1e-3 ||
          std::abs(g[2]) < 1e-3)
        continue;
      auto tangent = [&] {
        std::array<C, 3> r{rand_disk(rng, 1.0), rand_disk(rng, 1.0),
                           rand_disk(rng, 1.0)};
        return std::array<C, 3>{g[1] * r[2] - g[2] * r[1],
                                g[2] * r[0] - g[0] * r[2],
                                g[0] * r[1] - g[1] * r[0]};
      };
      auto u = tangent(), v = tangent();
      // Image point.
      std::array<C, 3> Y = X;
      C Fi = X[(3 - gc.i - gc.j) % 3];  // placeholder, computed below
      {
        int i = gc.i, j = gc.j, k = 3 - i - j;
        C thi = th[i];
        Fi = X[j] * X[k] + C(2) * X[i] - thi;
        Y[i] = X[j];
        Y[j] = X[i] - Fi;
        Y[k] = X[k];
      }
      CHECK(std::abs(fricke_eval_num(Y, th2).F) < 1e-8);
      auto du = braid_tangent(gc.i, gc.j, X, u);
      auto dv = braid_tangent(gc.i, gc.j, X, v);
      C before = symplectic_pair(X, th, u, v);
      C after = symplectic_pair(Y, th2, du, dv);
      CHECK(std::abs(after - before) < 1e-9 * (std::abs(before) + 1.0));
      ++points;
    }
    CHECK(points == 50);
  }
}
