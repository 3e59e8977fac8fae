#include "pcv/confluence.hpp"

#include <cmath>

namespace pcv {

ExactPoint ConfluentParams::as_point() const {
  return {{Sym::e0, e0}, {Sym::et, et},     {Sym::e1, e1},
          {Sym::einf, einf}, {Sym::et1, et1}, {Sym::nu, nu}};
}

ConfluentParams confluent_params(const GaussianRational& e0,
                                 const GaussianRational& et1,
                                 const GaussianRational& einf,
                                 const GaussianRational& et) {
  if (e0.is_zero() || et1.is_zero() || einf.is_zero() || et.is_zero())
    throw DomainError("confluent parameters must be nonzero");
  ConfluentParams cp;
  cp.e0 = e0;
  cp.et1 = et1;
  cp.einf = einf;
  cp.et = et;
  cp.e1 = -et1 / et;
  cp.nu = et * et;
  return cp;
}

NumConfluentParams confluent_params_from_eps(C theta0, C theta1_tilde,
                                             C thetainf, C eps) {
  if (std::abs(eps) == 0.0)
    throw DomainError("eps = 0: the limit parameters carry no e_t");
  const C ipi(0.0, M_PI);
  C thetat = 1.0 / eps;
  C theta1 = -1.0 / eps + theta1_tilde + 1.0;
  NumConfluentParams cp;
  cp.e0 = std::exp(ipi * theta0);
  cp.et = std::exp(ipi * thetat);
  cp.e1 = std::exp(ipi * theta1);
  cp.einf = std::exp(ipi * thetainf);
  cp.et1 = -cp.et * cp.e1;
  cp.nu = cp.et * cp.et;
  return cp;
}

const RationalMap& phi_map() {
  static const RationalMap phi = [] {
    RatExpr Wt = RatExpr::var(Sym::Wt), U1 = RatExpr::var(Sym::U1);
    RatExpr et = RatExpr::var(Sym::et), e1 = RatExpr::var(Sym::e1);
    RatExpr FWt{fricke_v_partial_et_e1(1)};
    SubstMap r;
    r[Sym::Xt] = U1 / e1 + Wt / et;
    r[Sym::X1] = U1 / et + Wt / e1 - FWt / e1;
    return RationalMap(std::move(r));
  }();
  return phi;
}

const RationalMap& phi_inverse_map() {
  static const RationalMap inv = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Xt = RatExpr::var(Sym::Xt),
            X1 = RatExpr::var(Sym::X1);
    RatExpr et = RatExpr::var(Sym::et), e1 = RatExpr::var(Sym::e1);
    auto th = theta_v_sym_et_e1();
    RatExpr den = X0 - et / e1 - e1 / et;
    RatExpr FX1{fricke_vi_partial(2)};
    SubstMap r;
    r[Sym::U1] = -(et * Xt + e1 * X1 - RatExpr(th[1])) / den;
    r[Sym::Wt] = -(e1 * Xt + et * X1 - RatExpr(th[2]) - et * FX1) / den;
    return RationalMap(std::move(r));
  }();
  return inv;
}

const RatExpr& phi_inverse_u1_alt() {
  static const RatExpr alt = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Xt = RatExpr::var(Sym::Xt),
            X1 = RatExpr::var(Sym::X1);
    RatExpr et = RatExpr::var(Sym::et), e1 = RatExpr::var(Sym::e1);
    auto th = theta_v_sym_et_e1();
    RatExpr FX0{fricke_vi_partial(0)};
    return -(et * e1) * (X0 - et / e1 - e1 / et - FX0) /
           (e1 * Xt + et * X1 - RatExpr(th[2]));
  }();
  return alt;
}

RatExpr f_vi_pullback() { return subst(fricke_vi_sym(), phi_map().rules()); }

RatExpr f_vi_partial_pullback(int i) {
  return subst(fricke_vi_partial(i), phi_map().rules());
}

std::array<GaussianRational, 3> phi_forward(
    const std::array<GaussianRational, 3>& P, const ConfluentParams& cp) {
  auto th = theta_tilde(cp.v());
  const GaussianRational &X0 = P[0], &Wt = P[1], &U1 = P[2];
  GaussianRational FWt = X0 * U1 + GaussianRational(2) * Wt - th[1];
  GaussianRational Xt = U1 / cp.e1 + Wt / cp.et;
  GaussianRational X1 = U1 / cp.et + Wt / cp.e1 - FWt / cp.e1;
  return {X0, Xt, X1};
}

std::array<C, 3> phi_forward_num(const std::array<C, 3>& P,
                                 const NumConfluentParams& cp) {
  auto th = cp.v().theta();
  const C &X0 = P[0], &Wt = P[1], &U1 = P[2];
  C FWt = X0 * U1 + 2.0 * Wt - th[1];
  return {X0, U1 / cp.e1 + Wt / cp.et, U1 / cp.et + Wt / cp.e1 - FWt / cp.e1};
}

std::array<GaussianRational, 3> phi_inverse(
    const std::array<GaussianRational, 3>& X, const ConfluentParams& cp) {
  auto th = theta_tilde(cp.v());
  const GaussianRational &X0 = X[0], &Xt = X[1], &X1 = X[2];
  GaussianRational den = X0 - cp.et / cp.e1 - cp.e1 / cp.et;
  GaussianRational altden = cp.e1 * Xt + cp.et * X1 - th[2];
  GaussianRational U1, Wt;
  if (!den.is_zero()) {
    FrickeVI f = fricke_eval(X, cp.vi());
    U1 = -(cp.et * Xt + cp.e1 * X1 - th[1]) / den;
    Wt = -(cp.e1 * Xt + cp.et * X1 - th[2] - cp.et * f.F1) / den;
  } else if (!altden.is_zero()) {
    FrickeVI f = fricke_eval(X, cp.vi());
    U1 = -(cp.et * cp.e1) * (den - f.F0) / altden;
    Wt = cp.et * Xt - (cp.et / cp.e1) * U1;
  } else {
    throw OnSingularLineError();
  }
  return {X0, Wt, U1};
}

std::array<C, 3> phi_inverse_num(const std::array<C, 3>& X,
                                 const NumConfluentParams& cp, double tol) {
  auto th = cp.v().theta();
  auto thvi = cp.vi().theta();
  const C &X0 = X[0], &Xt = X[1], &X1 = X[2];
  C den = X0 - cp.et / cp.e1 - cp.e1 / cp.et;
  C altden = cp.e1 * Xt + cp.et * X1 - th[2];
  FrickeVIN f = fricke_eval_num(X, thvi);
  C U1, Wt;
  if (std::abs(den) > tol) {
    U1 = -(cp.et * Xt + cp.e1 * X1 - th[1]) / den;
    Wt = -(cp.e1 * Xt + cp.et * X1 - th[2] - cp.et * f.F1) / den;
  } else if (std::abs(altden) > tol) {
    U1 = -(cp.et * cp.e1) * (den - f.F0) / altden;
    Wt = cp.et * Xt - (cp.et / cp.e1) * U1;
  } else {
    throw OnSingularLineError();
  }
  return {X0, Wt, U1};
}

bool on_line_l0(const std::array<GaussianRational, 3>& X,
                const ConfluentParams& cp) {
  auto th = theta_tilde(cp.v());
  GaussianRational den = X[0] - cp.et / cp.e1 - cp.e1 / cp.et;
  GaussianRational lin = cp.e1 * X[1] + cp.et * X[2] - th[2];
  return den.is_zero() && lin.is_zero();
}

BlowupChartPoint blowup_chart(const std::array<GaussianRational, 3>& X,
                              const ConfluentParams& cp) {
  if (!on_line_l0(X, cp))
    throw DomainError("blowup_chart requires a point on the line L_0");
  auto th = theta_tilde(cp.v());
  return {GaussianRational(0), -cp.et / cp.e1, GaussianRational(1),
          th[1] - cp.et * X[1] - cp.e1 * X[2]};
}

}  // namespace pcv
