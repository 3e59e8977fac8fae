#include "pcv/charvar_vi.hpp"

#include <algorithm>
#include <cmath>

namespace pcv {

namespace {
GaussianRational a_val(const GaussianRational& e) { return e + e.inverse(); }
}  // namespace

std::array<GaussianRational, 4> ParamsVI::a() const {
  return {a_val(e0), a_val(et), a_val(e1), a_val(einf)};
}

std::array<GaussianRational, 4> ParamsVI::theta() const {
  return theta_from_a(a());
}

ExactPoint ParamsVI::as_point() const {
  return {{Sym::e0, e0}, {Sym::et, et}, {Sym::e1, e1}, {Sym::einf, einf}};
}

std::array<C, 4> NumParamsVI::a() const {
  return {e0 + 1.0 / e0, et + 1.0 / et, e1 + 1.0 / e1, einf + 1.0 / einf};
}

std::array<C, 4> NumParamsVI::theta() const { return theta_from_a_num(a()); }

std::array<GaussianRational, 4> theta_from_a(
    const std::array<GaussianRational, 4>& a) {
  std::array<GaussianRational, 4> th;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    th[i] = a[i] * a[3] + a[j] * a[k];
  }
  th[3] = a[0] * a[1] * a[2] * a[3] + a[0] * a[0] + a[1] * a[1] +
          a[2] * a[2] + a[3] * a[3] - GaussianRational(4);
  return th;
}

std::array<C, 4> theta_from_a_num(const std::array<C, 4>& a) {
  std::array<C, 4> th;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    th[i] = a[i] * a[3] + a[j] * a[k];
  }
  th[3] = a[0] * a[1] * a[2] * a[3] + a[0] * a[0] + a[1] * a[1] +
          a[2] * a[2] + a[3] * a[3] - 4.0;
  return th;
}

FrickeVI fricke_eval(const std::array<GaussianRational, 3>& X,
                     const ParamsVI& p) {
  auto th = p.theta();
  FrickeVI out;
  out.F = X[0] * X[1] * X[2] + X[0] * X[0] + X[1] * X[1] + X[2] * X[2] -
          th[0] * X[0] - th[1] * X[1] - th[2] * X[2] + th[3];
  GaussianRational two(2);
  out.F0 = X[1] * X[2] + two * X[0] - th[0];
  out.Ft = X[2] * X[0] + two * X[1] - th[1];
  out.F1 = X[0] * X[1] + two * X[2] - th[2];
  return out;
}

FrickeVIN fricke_eval_num(const std::array<C, 3>& X,
                          const std::array<C, 4>& th) {
  FrickeVIN out;
  out.F = X[0] * X[1] * X[2] + X[0] * X[0] + X[1] * X[1] + X[2] * X[2] -
          th[0] * X[0] - th[1] * X[1] - th[2] * X[2] + th[3];
  out.F0 = X[1] * X[2] + 2.0 * X[0] - th[0];
  out.Ft = X[2] * X[0] + 2.0 * X[1] - th[1];
  out.F1 = X[0] * X[1] + 2.0 * X[2] - th[2];
  return out;
}

Poly a_of_e(Sym e) { return Poly::var(e) + Poly::var(e, -1); }

std::array<Poly, 4> theta_vi_sym() {
  Poly a[4] = {a_of_e(Sym::e0), a_of_e(Sym::et), a_of_e(Sym::e1),
               a_of_e(Sym::einf)};
  std::array<Poly, 4> th;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    th[i] = a[i] * a[3] + a[j] * a[k];
  }
  th[3] = a[0] * a[1] * a[2] * a[3] + a[0] * a[0] + a[1] * a[1] +
          a[2] * a[2] + a[3] * a[3] - Poly(4);
  return th;
}

const Poly& fricke_vi_sym() {
  static const Poly F = [] {
    auto th = theta_vi_sym();
    Poly X0 = Poly::var(Sym::X0), Xt = Poly::var(Sym::Xt),
         X1 = Poly::var(Sym::X1);
    return X0 * Xt * X1 + X0 * X0 + Xt * Xt + X1 * X1 - th[0] * X0 -
           th[1] * Xt - th[2] * X1 + th[3];
  }();
  return F;
}

const Poly& fricke_vi_partial(int i) {
  static const std::array<Poly, 3> P = [] {
    std::array<Poly, 3> out;
    for (int c = 0; c < 3; ++c) out[c] = fricke_vi_sym().derivative(kXSym[c]);
    return out;
  }();
  return P[i];
}

C symplectic_pair_chart(const std::array<C, 3>& X,
                        const std::array<C, 4>& theta,
                        const std::array<C, 3>& u, const std::array<C, 3>& v,
                        int c) {
  FrickeVIN f = fricke_eval_num(X, theta);
  C partial[3] = {f.F0, f.Ft, f.F1};
  int a = (c + 1) % 3, b = (c + 2) % 3;
  return (u[a] * v[b] - u[b] * v[a]) / partial[c];
}

C symplectic_pair(const std::array<C, 3>& X, const std::array<C, 4>& theta,
                  const std::array<C, 3>& u, const std::array<C, 3>& v) {
  FrickeVIN f = fricke_eval_num(X, theta);
  C partial[3] = {f.F0, f.Ft, f.F1};
  int best = 0;
  for (int c = 1; c < 3; ++c)
    if (std::abs(partial[c]) > std::abs(partial[best])) best = c;
  if (std::abs(partial[best]) < 1e-12)
    throw DomainError("all partials vanish: singular point");
  return symplectic_pair_chart(X, theta, u, v, best);
}

const std::vector<LineVI>& lines_vi_sym() {
  static const std::vector<LineVI> lines = [] {
    std::vector<LineVI> out;
    for (int k = 0; k < 3; ++k) {
      int i = (k + 1) % 3, j = (k + 2) % 3;
      RatExpr ei = RatExpr::var(kESym[i]), ej = RatExpr::var(kESym[j]),
              ek = RatExpr::var(kESym[k]), einf = RatExpr::var(Sym::einf);
      RatExpr ai{a_of_e(kESym[i])}, aj{a_of_e(kESym[j])},
          ak{a_of_e(kESym[k])}, ainf{a_of_e(Sym::einf)};
      RatExpr one(1);
      auto add = [&](int family, RatExpr xk, RatExpr ci, RatExpr cj,
                     RatExpr rhs) {
        out.push_back({k, family, std::move(xk), std::move(ci), std::move(cj),
                       std::move(rhs)});
      };
      RatExpr x_ratio = ei / ej + ej / ei;
      RatExpr x_prod = ei * ej + one / (ei * ej);
      RatExpr x_kratio = ek / einf + einf / ek;
      RatExpr x_kprod = ek * einf + one / (ek * einf);
      add(1, x_ratio, ei, ej, ainf + ei * ej * ak);
      add(2, x_ratio, ej, ei, ak + ei * ej * ainf);
      add(3, x_prod, one, ei * ej, ej * ak + ei * ainf);
      add(4, x_prod, ei * ej, one, ej * ainf + ei * ak);
      add(5, x_kratio, einf, ek, ai + ek * einf * aj);
      add(6, x_kratio, ek, einf, aj + ek * einf * ai);
      add(7, x_kprod, one, ek * einf, ek * aj + einf * ai);
      add(8, x_kprod, ek * einf, one, ek * ai + einf * aj);
    }
    return out;
  }();
  return lines;
}

std::vector<LineVIValue> lines_vi(const ParamsVI& p) {
  ExactPoint pt = p.as_point();
  std::vector<LineVIValue> out;
  for (const LineVI& L : lines_vi_sym()) {
    out.push_back({L.k, L.family, L.xk.eval_exact(pt), L.ci.eval_exact(pt),
                   L.cj.eval_exact(pt), L.rhs.eval_exact(pt)});
  }
  return out;
}

std::vector<SingularPointVI> singularities_vi(const ParamsVI& p) {
  auto a = p.a();
  GaussianRational two(2);
  std::vector<SingularPointVI> out;
  auto consider = [&](const std::array<GaussianRational, 3>& X,
                      const std::string& kind) {
    FrickeVI f = fricke_eval(X, p);
    if (!f.F.is_zero() || !f.F0.is_zero() || !f.Ft.is_zero() ||
        !f.F1.is_zero())
      return;
    for (const auto& s : out)
      if (s.X == X) return;
    out.push_back({X, kind});
  };
  static const char* idx_name[3] = {"0", "t", "1"};
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    for (int sgn : {+1, -1}) {
      GaussianRational s(sgn);
      if (a[i] != s * two) continue;
      std::array<GaussianRational, 3> X;
      X[i] = s * a[3];
      X[j] = s * a[k];
      X[k] = s * a[j];
      consider(X, std::string("a_") + idx_name[i] + (sgn > 0 ? "=+2" : "=-2"));
    }
  }
  for (int sgn : {+1, -1}) {
    GaussianRational s(sgn);
    if (a[3] == s * two) {
      consider({s * a[0], s * a[1], s * a[2]},
               sgn > 0 ? "a_inf=+2" : "a_inf=-2");
    }
  }
  GaussianRational e[3] = {p.e0, p.et, p.e1};
  for (int d0 : {+1, -1})
    for (int d1 : {+1, -1})
      for (int d2 : {+1, -1}) {
        int d[3] = {d0, d1, d2};
        GaussianRational prod = e[0].pow(d0) * e[1].pow(d1) * e[2].pow(d2) *
                                p.einf;
        if (!prod.is_one()) continue;
        std::array<GaussianRational, 3> X;
        for (int i = 0; i < 3; ++i) {
          int j = (i + 1) % 3, k = (i + 2) % 3;
          GaussianRational m = e[j].pow(d[j]) * e[k].pow(d[k]);
          X[i] = m + m.inverse();
        }
        std::string kind = "reducible(";
        for (int i = 0; i < 3; ++i)
          kind += (d[i] > 0 ? "+" : "-");
        kind += ")";
        consider(X, kind);
      }
  return out;
}

Poly w_vi_a_form_sym() {
  Poly a0 = a_of_e(Sym::e0), at = a_of_e(Sym::et), a1 = a_of_e(Sym::e1),
       ai = a_of_e(Sym::einf);
  return (a0 + at + a1 + ai) * (a0 + ai - at - a1) * (at + ai - a1 - a0) *
             (a1 + ai - a0 - at) -
         (a0 * ai - at * a1) * (at * ai - a1 * a0) * (a1 * ai - a0 * at);
}

Poly w_vi_e_form_sym() {
  Poly e0 = Poly::var(Sym::e0), et = Poly::var(Sym::et),
       e1 = Poly::var(Sym::e1), ei = Poly::var(Sym::einf);
  Poly P = e0 * et * e1 * ei;
  Poly front = (P - Poly(1)) * (e0 * et - e1 * ei) * (et * e1 - e0 * ei) *
               (e1 * e0 - et * ei) * P.pow(-4);
  // prod over l of (e_l - e_i e_j e_k), the product of the other three.
  Poly tail = (e0 - et * e1 * ei) * (et - e1 * ei * e0) * (e1 - ei * e0 * et) *
              (ei - e0 * et * e1);
  return front * tail;
}

GaussianRational w_discriminant(const ParamsVI& p) {
  return w_vi_a_form_sym().eval_exact(p.as_point());
}

GaussianRational w_discriminant_e_form(const ParamsVI& p) {
  return w_vi_e_form_sym().eval_exact(p.as_point());
}

std::array<C, 3> sample_point_vi(const std::array<C, 4>& th, uint64_t seed) {
  auto rng = seeded_rng(seed);
  C X0 = rand_disk(rng, 2.0);
  C Xt = rand_disk(rng, 2.0);
  // F as a monic quadratic in X1.
  C b = X0 * Xt - th[2];
  C c = X0 * X0 + Xt * Xt - th[0] * X0 - th[1] * Xt + th[3];
  auto [r1, r2] = solve_monic_quadratic(b, c);
  C X1 = (rng() & 1) ? r1 : r2;
  return {X0, Xt, X1};
}

}  // namespace pcv
