#include "pcv/charvar_v.hpp"

#include <cmath>

namespace pcv {

namespace {
GaussianRational a_val(const GaussianRational& e) { return e + e.inverse(); }
}  // namespace

std::array<GaussianRational, 3> ParamsV::a() const {
  return {a_val(e0), a_val(et1), a_val(einf)};
}

std::array<GaussianRational, 4> ParamsV::theta() const {
  return theta_tilde(*this);
}

ExactPoint ParamsV::as_point() const {
  return {{Sym::e0, e0}, {Sym::et1, et1}, {Sym::einf, einf}};
}

std::array<GaussianRational, 4> theta_tilde(const ParamsV& p) {
  GaussianRational a0 = a_val(p.e0), ainf = a_val(p.einf), t = p.et1;
  return {-t, ainf - t * a0, a0 - t * ainf,
          GaussianRational(1) - t * a0 * ainf + t * t};
}

std::array<C, 4> theta_tilde_num(C a0, C et1, C ainf) {
  return {-et1, ainf - et1 * a0, a0 - et1 * ainf,
          C(1) - et1 * a0 * ainf + et1 * et1};
}

std::array<C, 4> NumParamsV::theta() const {
  return theta_tilde_num(e0 + 1.0 / e0, et1, einf + 1.0 / einf);
}

FrickeV fricke_v_eval(const std::array<GaussianRational, 3>& P,
                      const ParamsV& p) {
  auto th = theta_tilde(p);
  const GaussianRational &X0 = P[0], &Wt = P[1], &U1 = P[2];
  GaussianRational two(2);
  FrickeV out;
  out.F = X0 * Wt * U1 + Wt * Wt + U1 * U1 - th[0] * X0 - th[1] * Wt -
          th[2] * U1 + th[3];
  out.FX0 = Wt * U1 - th[0];
  out.FWt = X0 * U1 + two * Wt - th[1];
  out.FU1 = X0 * Wt + two * U1 - th[2];
  return out;
}

FrickeVN fricke_v_eval_num(const std::array<C, 3>& P,
                           const std::array<C, 4>& th) {
  const C &X0 = P[0], &Wt = P[1], &U1 = P[2];
  FrickeVN out;
  out.F = X0 * Wt * U1 + Wt * Wt + U1 * U1 - th[0] * X0 - th[1] * Wt -
          th[2] * U1 + th[3];
  out.FX0 = Wt * U1 - th[0];
  out.FWt = X0 * U1 + 2.0 * Wt - th[1];
  out.FU1 = X0 * Wt + 2.0 * U1 - th[2];
  return out;
}

std::array<Poly, 4> theta_v_sym() {
  Poly a0 = a_of_e(Sym::e0), ainf = a_of_e(Sym::einf), t = Poly::var(Sym::et1);
  return {Poly(0) - t, ainf - t * a0, a0 - t * ainf,
          Poly(1) - t * a0 * ainf + t * t};
}

std::array<Poly, 4> theta_v_sym_et_e1() {
  Poly a0 = a_of_e(Sym::e0), ainf = a_of_e(Sym::einf);
  Poly p = Poly::var(Sym::et) * Poly::var(Sym::e1);  // e_t e_1 = -et1
  return {p, ainf + p * a0, a0 + p * ainf, Poly(1) + p * a0 * ainf + p * p};
}

namespace {
Poly fricke_from_theta(const std::array<Poly, 4>& th) {
  Poly X0 = Poly::var(Sym::X0), Wt = Poly::var(Sym::Wt),
       U1 = Poly::var(Sym::U1);
  return X0 * Wt * U1 + Wt * Wt + U1 * U1 - th[0] * X0 - th[1] * Wt -
         th[2] * U1 + th[3];
}
constexpr Sym kVSym[3] = {Sym::X0, Sym::Wt, Sym::U1};
}  // namespace

const Poly& fricke_v_sym() {
  static const Poly F = fricke_from_theta(theta_v_sym());
  return F;
}

const Poly& fricke_v_partial(int i) {
  static const std::array<Poly, 3> P = [] {
    std::array<Poly, 3> out;
    for (int c = 0; c < 3; ++c) out[c] = fricke_v_sym().derivative(kVSym[c]);
    return out;
  }();
  return P[i];
}

const Poly& fricke_v_sym_et_e1() {
  static const Poly F = fricke_from_theta(theta_v_sym_et_e1());
  return F;
}

const Poly& fricke_v_partial_et_e1(int i) {
  static const std::array<Poly, 3> P = [] {
    std::array<Poly, 3> out;
    for (int c = 0; c < 3; ++c)
      out[c] = fricke_v_sym_et_e1().derivative(kVSym[c]);
    return out;
  }();
  return P[i];
}

C symplectic_pair_v_chart(const std::array<C, 3>& P,
                          const std::array<C, 4>& theta,
                          const std::array<C, 3>& u,
                          const std::array<C, 3>& v, int c) {
  FrickeVN f = fricke_v_eval_num(P, theta);
  C partial[3] = {f.FX0, f.FWt, f.FU1};
  int a = (c + 1) % 3, b = (c + 2) % 3;
  return (u[a] * v[b] - u[b] * v[a]) / partial[c];
}

C symplectic_pair_v(const std::array<C, 3>& P, const std::array<C, 4>& theta,
                    const std::array<C, 3>& u, const std::array<C, 3>& v) {
  FrickeVN f = fricke_v_eval_num(P, theta);
  C partial[3] = {f.FX0, f.FWt, f.FU1};
  int best = 0;
  for (int c = 1; c < 3; ++c)
    if (std::abs(partial[c]) > std::abs(partial[best])) best = c;
  if (std::abs(partial[best]) < 1e-12)
    throw DomainError("all partials vanish: singular point");
  return symplectic_pair_v_chart(P, theta, u, v, best);
}

const std::vector<DecompositionV>& decompositions_v_sym() {
  static const std::vector<DecompositionV> decs = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Wt = RatExpr::var(Sym::Wt),
            U1 = RatExpr::var(Sym::U1);
    RatExpr e0 = RatExpr::var(Sym::e0), ei = RatExpr::var(Sym::einf),
            t = RatExpr::var(Sym::et1);
    RatExpr a0{a_of_e(Sym::e0)}, ai{a_of_e(Sym::einf)};
    RatExpr FX0{fricke_v_partial(0)}, FWt{fricke_v_partial(1)},
        FU1{fricke_v_partial(2)};
    RatExpr one(1);
    std::vector<DecompositionV> out;
    auto add = [&](RatExpr A, RatExpr B, RatExpr C_, RatExpr D) {
      out.push_back({static_cast<int>(out.size()) + 1, std::move(A),
                     std::move(B), std::move(C_), std::move(D)});
    };
    // Three decompositions with the X0-factor times F_{X0}:
    add(X0 + t + one / t, FX0, RatExpr(0) - t * (Wt - U1 / t - ai),
        U1 - Wt / t - a0);
    add(X0 - e0 * ei - one / (e0 * ei), FX0,
        e0 * Wt + U1 / ei + t - e0 / ei, Wt / e0 + ei * U1 + t - ei / e0);
    add(X0 - e0 / ei - ei / e0, FX0, e0 * Wt + ei * U1 + t - e0 * ei,
        Wt / e0 + U1 / ei + t - one / (e0 * ei));
    // Four with the Wt-factor:
    add(Wt - ei, FWt - Wt + ei, U1 + t / ei, ei * X0 + U1 + t * ei - a0);
    add(Wt - one / ei, FWt - Wt + one / ei, U1 + t * ei,
        X0 / ei + U1 + t / ei - a0);
    add(Wt + t * e0, FWt - Wt - t * e0, U1 - one / e0,
        RatExpr(0) - t * e0 * X0 + U1 - e0 + t * ai);
    add(Wt + t / e0, FWt - Wt - t / e0, U1 - e0,
        RatExpr(0) - (t / e0) * X0 + U1 - one / e0 + t * ai);
    // Four with the U1-factor:
    add(U1 - e0, FU1 - U1 + e0, Wt + t / e0, e0 * X0 + Wt + t * e0 - ai);
    add(U1 - one / e0, FU1 - U1 + one / e0, Wt + t * e0,
        X0 / e0 + Wt + t / e0 - ai);
    add(U1 + t * ei, FU1 - U1 - t * ei, Wt - one / ei,
        RatExpr(0) - t * ei * X0 + Wt - ei + t * a0);
    add(U1 + t / ei, FU1 - U1 - t / ei, Wt - ei,
        RatExpr(0) - (t / ei) * X0 + Wt - one / ei + t * a0);
    return out;
  }();
  return decs;
}

const std::vector<LineV>& lines_v_sym() {
  static const std::vector<LineV> lines = [] {
    RatExpr e0 = RatExpr::var(Sym::e0), ei = RatExpr::var(Sym::einf),
            t = RatExpr::var(Sym::et1);
    RatExpr one(1);
    // The coordinate pinned by the A-factor of each decomposition and the
    // value that makes A vanish.
    const Sym fixed[11] = {Sym::X0, Sym::X0, Sym::X0, Sym::Wt, Sym::Wt,
                           Sym::Wt, Sym::Wt, Sym::U1, Sym::U1, Sym::U1,
                           Sym::U1};
    const RatExpr value[11] = {
        RatExpr(0) - t - one / t, e0 * ei + one / (e0 * ei),
        e0 / ei + ei / e0,        ei,
        one / ei,                 RatExpr(0) - t * e0,
        RatExpr(0) - t / e0,      e0,
        one / e0,                 RatExpr(0) - t * ei,
        RatExpr(0) - t / ei};
    std::vector<LineV> out;
    for (const DecompositionV& d : decompositions_v_sym()) {
      int n = d.index - 1;
      out.push_back({d.index, 0, fixed[n], value[n], d.C});
      out.push_back({d.index, 1, fixed[n], value[n], d.D});
    }
    return out;
  }();
  return lines;
}

std::vector<LineVValue> lines_v(const ParamsV& p) {
  ExactPoint params = p.as_point();
  std::vector<LineVValue> out;
  for (const LineV& L : lines_v_sym()) {
    // The two coordinates not pinned by the fixed equation.
    std::array<Sym, 2> vars{};
    int n = 0;
    for (Sym s : {Sym::X0, Sym::Wt, Sym::U1})
      if (s != L.fixed_var) vars[n++] = s;
    ExactPoint pt = params;
    pt[vars[0]] = GaussianRational(0);
    pt[vars[1]] = GaussianRational(0);
    GaussianRational c0 = L.linear.eval_exact(pt);
    pt[vars[0]] = GaussianRational(1);
    GaussianRational c1 = L.linear.eval_exact(pt) - c0;
    pt[vars[0]] = GaussianRational(0);
    pt[vars[1]] = GaussianRational(1);
    GaussianRational c2 = L.linear.eval_exact(pt) - c0;
    out.push_back({L.decomposition, L.branch, L.fixed_var,
                   L.fixed_value.eval_exact(params), vars, c1, c2, c0});
  }
  return out;
}

std::vector<SingularPointV> singularities_v(const ParamsV& p) {
  GaussianRational a0 = a_val(p.e0), ainf = a_val(p.einf), t = p.et1;
  GaussianRational two(2), one(1);
  std::vector<SingularPointV> out;
  auto consider = [&](const std::array<GaussianRational, 3>& P,
                      const std::string& kind) {
    FrickeV f = fricke_v_eval(P, p);
    if (!f.F.is_zero() || !f.FX0.is_zero() || !f.FWt.is_zero() ||
        !f.FU1.is_zero())
      return;
    for (const auto& s : out)
      if (s.P == P) return;
    out.push_back({P, kind});
  };
  for (int sgn : {+1, -1}) {
    GaussianRational s(sgn);
    if (a0 == s * two)
      consider({s * ainf, -s * t, s * one}, sgn > 0 ? "a_0=+2" : "a_0=-2");
    if (ainf == s * two)
      consider({s * a0, s * one, -s * t}, sgn > 0 ? "a_inf=+2" : "a_inf=-2");
  }
  GaussianRational at1 = a_val(p.et1);
  if ((-t * p.e0 * p.einf).is_one())
    consider({-at1, p.einf.inverse(), p.e0.inverse()},
             "reducible(-et1*e0*einf=1)");
  if (-t == p.e0 * p.einf)
    consider({-at1, p.einf, p.e0}, "reducible(-et1=e0*einf)");
  return out;
}

RatExpr w_v_a_form_sym() {
  Poly a0 = a_of_e(Sym::e0), at1 = a_of_e(Sym::et1), ai = a_of_e(Sym::einf);
  return RatExpr(a0 * a0 + at1 * at1 + ai * ai + a0 * at1 * ai - Poly(4));
}

RatExpr w_v_e_form_sym() {
  Poly e0 = Poly::var(Sym::e0), t = Poly::var(Sym::et1),
       ei = Poly::var(Sym::einf);
  // The product e_t e_1 in the displayed four-factor form equals -et1.
  Poly p = Poly(0) - t;
  Poly num = (e0 * p * ei - Poly(1)) * (e0 * p - ei) * (p * ei - e0) *
             (p - e0 * ei);
  Poly den = (e0 * p * ei).pow(2);
  return RatExpr(num) * RatExpr(den.unit_inverse());
}

GaussianRational w_tilde(const ParamsV& p) {
  return w_v_a_form_sym().eval_exact(p.as_point());
}

GaussianRational w_tilde_e_form(const ParamsV& p) {
  return w_v_e_form_sym().eval_exact(p.as_point());
}

std::array<C, 3> sample_point_v(const std::array<C, 4>& th, uint64_t seed) {
  auto rng = seeded_rng(seed);
  C X0 = rand_disk(rng, 2.0);
  C Wt = rand_disk(rng, 2.0);
  // F~ as a monic quadratic in U1.
  C b = X0 * Wt - th[2];
  C c = Wt * Wt - th[0] * X0 - th[1] * Wt + th[3];
  auto [r1, r2] = solve_monic_quadratic(b, c);
  C U1 = (rng() & 1) ? r1 : r2;
  return {X0, Wt, U1};
}

}  // namespace pcv
