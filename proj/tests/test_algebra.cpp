#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "pcv/ratmap.hpp"

using namespace pcv;

TEST_CASE("exact scalar arithmetic in Q(i)") {
  GaussianRational a(mpq_class(2, 3)), b(mpq_class(1, 6));
  CHECK(a + b == GaussianRational(mpq_class(5, 6)));
  CHECK(a * b == GaussianRational(mpq_class(1, 9)));
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK((a + i) * (a - i) == a * a + GaussianRational(1));
  CHECK((a + i).inverse() * (a + i) == GaussianRational(1));
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DomainError);
}

TEST_CASE("non-canonical fraction input is normalized") {
  GaussianRational z{mpq_class(0, 3)};
  CHECK(z.is_zero());
  CHECK(GaussianRational(mpq_class(4, 6)) == GaussianRational(mpq_class(2, 3)));
  CHECK(GaussianRational(mpq_class(-8, 4)) == GaussianRational(-2));
}

TEST_CASE("scalar string round trip") {
  for (const char* s :
       {"0", "1", "-3/4", "2/7+1/3*i", "-1/2-2*i", "i", "-i", "5*i"}) {
    auto v = GaussianRational::parse(s);
    REQUIRE(v.has_value());
    auto w = GaussianRational::parse(v->to_string());
    REQUIRE(w.has_value());
    CHECK(*v == *w);
  }
  CHECK(!GaussianRational::parse("2/"));
  CHECK(!GaussianRational::parse("one"));
  CHECK(!GaussianRational::parse(""));
}

TEST_CASE("polynomial ring axioms on random-ish inputs") {
  Poly x = Poly::var(Sym::X0), y = Poly::var(Sym::Xt), e = Poly::var(Sym::e0);
  Poly ei = Poly::var(Sym::e0, -1);
  Poly p = x * x + y * e - Poly(3);
  Poly q = y * y * ei + x;
  Poly r = e * x - y;
  CHECK(p * q == q * p);
  CHECK((p + q) * r == p * r + q * r);
  CHECK(p * (q * r) == (p * q) * r);
  CHECK(p - p == Poly());
  CHECK(e * ei == Poly(1));
  CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("division with remainder, monic divisor") {
  Poly x1 = Poly::var(Sym::X1);
  Poly d = x1 * x1 + Poly(1);
  Poly n = x1.pow(3);
  auto [q, r] = n.divmod(d, Sym::X1);
  CHECK(q == x1);
  CHECK(r == -x1);
  CHECK(q * d + r == n);

  // Unit-monomial leading coefficient (Laurent in a parameter).
  Poly d2 = Poly::var(Sym::e0, -2) * x1 * x1 + Poly::var(Sym::et);
  Poly n2 = x1.pow(4) + x1 * Poly::var(Sym::e1);
  auto [q2, r2] = n2.divmod(d2, Sym::X1);
  CHECK(q2 * d2 + r2 == n2);
  CHECK(r2.degree(Sym::X1) < 2);
}

TEST_CASE("derivative and by_degree") {
  Poly x = Poly::var(Sym::X0), w = Poly::var(Sym::Wt);
  Poly p = x * x * w + w * w * Poly(2) + x;
  CHECK(p.derivative(Sym::X0) == Poly(2) * x * w + Poly(1));
  auto coeffs = p.by_degree(Sym::Wt);
  CHECK(coeffs[0] == x);
  CHECK(coeffs[1] == x * x);
  CHECK(coeffs[2] == Poly(2));
}

TEST_CASE("rational expressions: field operations and evaluation") {
  RatExpr x = RatExpr::var(Sym::X0), e = RatExpr::var(Sym::e0);
  RatExpr f = (x + e) / (x - e);
  RatExpr g = f * (x - e) - (x + e);
  CHECK(identity_equal_exact(g, RatExpr(0L)));
  ExactPoint p = {{Sym::X0, GaussianRational(3)},
                  {Sym::e0, GaussianRational(2)}};
  CHECK(f.eval_exact(p) == GaussianRational(5));
  ExactPoint bad = {{Sym::X0, GaussianRational(2)},
                    {Sym::e0, GaussianRational(2)}};
  CHECK_THROWS_AS(f.eval_exact(bad), DomainError);
  CHECK(identity_equal_exact(f / f, RatExpr(1L)));
}

TEST_CASE("exact and randomized identity tests agree") {
  RatExpr x = RatExpr::var(Sym::X0), y = RatExpr::var(Sym::Xt);
  RatExpr lhs = (x * x - y * y) / (x - y);
  RatExpr rhs = x + y;
  CHECK(identity_equal_exact(lhs, rhs));
  CHECK(identity_equal_randomized(lhs, rhs, 10, 1) == Verdict::True);
  RatExpr wrong = x - y;
  CHECK(!identity_equal_exact(lhs, wrong));
  CHECK(identity_equal_randomized(lhs, wrong, 10, 1) == Verdict::False);
}

TEST_CASE("substitution maps compose associatively") {
  SubstMap r1{{Sym::X0, RatExpr::var(Sym::X0) + RatExpr::var(Sym::Xt)}};
  SubstMap r2{{Sym::Xt, RatExpr::var(Sym::X0) * RatExpr::var(Sym::X1)}};
  SubstMap r3{{Sym::X1, RatExpr(2L)}};
  RationalMap f{r1}, g{r2}, h{r3};
  RationalMap lhs = compose(compose(f, g), h);
  RationalMap rhs = compose(f, compose(g, h));
  for (Sym s : {Sym::X0, Sym::Xt, Sym::X1})
    CHECK(identity_equal_exact(lhs.rule(s), rhs.rule(s)));
}

TEST_CASE("pointwise application matches symbolic composition") {
  SubstMap r1{{Sym::X0, RatExpr::var(Sym::Xt) * RatExpr::var(Sym::Xt)},
              {Sym::Xt, RatExpr::var(Sym::X0) - RatExpr(1L)}};
  SubstMap r2{{Sym::X0, RatExpr::var(Sym::X0) + RatExpr::var(Sym::Xt)}};
  RationalMap f{r1}, g{r2};
  RationalMap fg = compose(f, g);
  ExactPoint p = {{Sym::X0, GaussianRational(mpq_class(3, 2))},
                  {Sym::Xt, GaussianRational(-4)}};
  ExactPoint via_compose = fg.apply_exact(p);
  ExactPoint via_steps = f.apply_exact(g.apply_exact(p));
  CHECK(via_compose == via_steps);
}

TEST_CASE("identity modulo a monic quadratic") {
  // x1^2 == -b x1 - c modulo x1^2 + b x1 + c (b, c drawn from parameters).
  Poly x1 = Poly::var(Sym::X1);
  Poly b = Poly::var(Sym::e0), c = Poly::var(Sym::et);
  Poly mod = x1 * x1 + b * x1 + c;
  RatExpr lhs{x1 * x1};
  RatExpr rhs{-(b * x1) - c};
  CHECK(identity_equal_exact(lhs, rhs, &mod, Sym::X1));
  CHECK(!identity_equal_exact(lhs, rhs));
}
