#pragma once

#include "pcv/charvar_v.hpp"
#include "pcv/charvar_vi.hpp"
#include "pcv/ratmap.hpp"

namespace pcv {

// Raised when an operation is evaluated on the line where the coordinate
// change is singular (the indeterminacy line of the inverse map).
struct OnSingularLineError : DomainError {
  OnSingularLineError() : DomainError("point lies on the singular line L_0") {}
};

// Parameter record tying the two surfaces together: the degenerate-surface
// data (e0, et1, einf) plus an explicit splitting et * e1 = -et1 and the
// square nu = et^2.
struct ConfluentParams {
  GaussianRational e0, et1, einf;
  GaussianRational et, e1;
  GaussianRational nu;
  ParamsVI vi() const { return {e0, et, e1, einf}; }
  ParamsV v() const { return {e0, et1, einf}; }
  ExactPoint as_point() const;
};

struct NumConfluentParams {
  C e0, et1, einf, et, e1, nu;
  NumParamsVI vi() const { return {e0, et, e1, einf}; }
  NumParamsV v() const { return {e0, et1, einf}; }
};

// Builds the record from an explicit et; e1 = -et1/et.  All inputs nonzero.
ConfluentParams confluent_params(const GaussianRational& e0,
                                 const GaussianRational& et1,
                                 const GaussianRational& einf,
                                 const GaussianRational& et);

// Builds the record from exponents: given theta_0, merged theta~_1, theta_inf
// and eps != 0, sets theta_t = 1/eps, theta_1 = -1/eps + theta~_1 + 1 and
// e_l = exp(i*pi*theta_l).  Throws on eps == 0 (the limit has no e_t).
NumConfluentParams confluent_params_from_eps(C theta0, C theta1_tilde,
                                             C thetainf, C eps);

// --- the coordinate change --------------------------------------------------
// Rules X_t = U_1/e_1 + W_t/e_t and X_1 = U_1/e_t + W_t/e_1 - F~_{W_t}/e_1
// (X_0 fixed), expressed in the symbols X0, Wt, U1, e0, et, e1, einf.
const RationalMap& phi_map();
// Inverse rules for (W_t, U_1) in the symbols X0, Xt, X1, e0, et, e1, einf;
// both share the denominator X_0 - e_t/e_1 - e_1/e_t.
const RationalMap& phi_inverse_map();
// The alternative displayed expression for U_1 with denominator
// e_1 X_t + e_t X_1 - theta~_1 (used off the first formula's locus).
const RatExpr& phi_inverse_u1_alt();

// F ∘ Φ and F_{X_i} ∘ Φ as rational expressions in the degenerate-surface
// coordinates (for the transport-identity checks and the wild dynamics).
RatExpr f_vi_pullback();
RatExpr f_vi_partial_pullback(int i);

// --- pointwise application --------------------------------------------------
std::array<GaussianRational, 3> phi_forward(
    const std::array<GaussianRational, 3>& P, const ConfluentParams& cp);
std::array<C, 3> phi_forward_num(const std::array<C, 3>& P,
                                 const NumConfluentParams& cp);

// Uses whichever displayed formula for U_1 has a nonvanishing denominator;
// throws OnSingularLineError when both vanish (the point is on L_0).
std::array<GaussianRational, 3> phi_inverse(
    const std::array<GaussianRational, 3>& X, const ConfluentParams& cp);
std::array<C, 3> phi_inverse_num(const std::array<C, 3>& X,
                                 const NumConfluentParams& cp, double tol);

// --- the line L_0 and its blow-up chart -------------------------------------
// True iff X satisfies X_0 = e_t/e_1 + e_1/e_t and e_1 X_t + e_t X_1 = th~_1.
bool on_line_l0(const std::array<GaussianRational, 3>& X,
                const ConfluentParams& cp);

struct BlowupChartPoint {
  // Projective part (Z_0 : Z_t : Z_1) with Z_0 = 0, plus the affine
  // coordinate Z_inf = th~_t - e_t X_t - e_1 X_1 along the exceptional line.
  GaussianRational Z0, Zt, Z1, Zinf;
};
// Requires X on L_0 (exact); throws DomainError otherwise.
BlowupChartPoint blowup_chart(const std::array<GaussianRational, 3>& X,
                              const ConfluentParams& cp);

}  // namespace pcv
