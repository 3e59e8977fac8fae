#pragma once

#include <array>
#include <string>
#include <vector>

#include "pcv/numeric.hpp"
#include "pcv/ratexpr.hpp"

namespace pcv {

// Index convention shared by the whole library: coordinates and eigenvalues
// are indexed 0 -> (X0,e0), 1 -> (Xt,et), 2 -> (X1,e1); the cyclic successor
// of k gives the (i,j) pair used in line families and braid rules.
inline constexpr Sym kXSym[3] = {Sym::X0, Sym::Xt, Sym::X1};
inline constexpr Sym kESym[3] = {Sym::e0, Sym::et, Sym::e1};

struct ParamsVI {
  GaussianRational e0, et, e1, einf;
  std::array<GaussianRational, 4> a() const;      // a_0, a_t, a_1, a_inf
  std::array<GaussianRational, 4> theta() const;  // th_0, th_t, th_1, th_inf
  ExactPoint as_point() const;                    // e-symbol assignment
};

struct NumParamsVI {
  C e0, et, e1, einf;
  std::array<C, 4> a() const;
  std::array<C, 4> theta() const;
};

std::array<GaussianRational, 4> theta_from_a(
    const std::array<GaussianRational, 4>& a);
std::array<C, 4> theta_from_a_num(const std::array<C, 4>& a);

struct FrickeVI {
  GaussianRational F, F0, Ft, F1;
};
struct FrickeVIN {
  C F, F0, Ft, F1;
};
FrickeVI fricke_eval(const std::array<GaussianRational, 3>& X,
                     const ParamsVI& p);
FrickeVIN fricke_eval_num(const std::array<C, 3>& X,
                          const std::array<C, 4>& theta);

// --- symbolic layer ---------------------------------------------------------
// a_l = e_l + 1/e_l as a Laurent polynomial.
Poly a_of_e(Sym e);
// theta_i in the four e-symbols; order (0, t, 1, inf).
std::array<Poly, 4> theta_vi_sym();
// F(X, a(e)) in symbols X0, Xt, X1, e0, et, e1, einf.
const Poly& fricke_vi_sym();
// F_{X_i}, i in {0,1,2} per the index convention.
const Poly& fricke_vi_partial(int i);

// --- symplectic pairing -----------------------------------------------------
// omega(u, v) at X using the residue chart whose denominator partial is
// largest in magnitude.  Throws on a singular point.
C symplectic_pair(const std::array<C, 3>& X, const std::array<C, 4>& theta,
                  const std::array<C, 3>& u, const std::array<C, 3>& v);
// Same but with a forced chart (0, 1 or 2); used by chart-agreement tests.
C symplectic_pair_chart(const std::array<C, 3>& X,
                        const std::array<C, 4>& theta,
                        const std::array<C, 3>& u, const std::array<C, 3>& v,
                        int chart);

// --- the 24 lines -----------------------------------------------------------
// Line { X_k = xk,  ci*X_i + cj*X_j = rhs } with (i, j, k) cyclic.
struct LineVI {
  int k;       // index of the fixed coordinate
  int family;  // 1..8, order of the proposition's list
  RatExpr xk, ci, cj, rhs;  // expressions in the e-symbols
};
const std::vector<LineVI>& lines_vi_sym();

struct LineVIValue {
  int k, family;
  GaussianRational xk, ci, cj, rhs;
};
std::vector<LineVIValue> lines_vi(const ParamsVI& p);

// --- singular locus ---------------------------------------------------------
struct SingularPointVI {
  std::array<GaussianRational, 3> X;
  std::string kind;
};
std::vector<SingularPointVI> singularities_vi(const ParamsVI& p);

// w(a) evaluated through the a-form resp. the e-form display.
GaussianRational w_discriminant(const ParamsVI& p);
GaussianRational w_discriminant_e_form(const ParamsVI& p);
// Both forms as Laurent polynomials in the e-symbols (equal; tested).
Poly w_vi_a_form_sym();
Poly w_vi_e_form_sym();

// --- sampling ---------------------------------------------------------------
// Draws X0, Xt in a disk, solves the monic quadratic F = 0 for X1.
std::array<C, 3> sample_point_vi(const std::array<C, 4>& theta, uint64_t seed);

}  // namespace pcv
