#pragma once

#include <string>
#include <vector>

#include "pcv/charvar_vi.hpp"

namespace pcv {

// Degenerate-surface parameter record: the primary data are e_0, the merged
// eigenvalue product et1 (written \tilde e_1 in formulas) and e_inf.
struct ParamsV {
  GaussianRational e0, et1, einf;
  std::array<GaussianRational, 3> a() const;      // a_0, a~_1, a_inf
  std::array<GaussianRational, 4> theta() const;  // th~_0, th~_t, th~_1, th~_inf
  ExactPoint as_point() const;
};

struct NumParamsV {
  C e0, et1, einf;
  std::array<C, 4> theta() const;
};

std::array<GaussianRational, 4> theta_tilde(const ParamsV& p);
std::array<C, 4> theta_tilde_num(C a0, C et1, C ainf);

struct FrickeV {
  GaussianRational F, FX0, FWt, FU1;
};
struct FrickeVN {
  C F, FX0, FWt, FU1;
};
FrickeV fricke_v_eval(const std::array<GaussianRational, 3>& P,
                      const ParamsV& p);
FrickeVN fricke_v_eval_num(const std::array<C, 3>& P,
                           const std::array<C, 4>& theta);

// --- symbolic layer ---------------------------------------------------------
// th~ in symbols e0, et1, einf; order (0, t, 1, inf).
std::array<Poly, 4> theta_v_sym();
// Same invariants computed through the alternative display that uses the
// product e_t e_1 in place of -et1 (symbols e0, et, e1, einf).
std::array<Poly, 4> theta_v_sym_et_e1();
// F~(X0, Wt, U1) in symbols X0, Wt, U1, e0, et1, einf.
const Poly& fricke_v_sym();
// Partials d/dX0, d/dWt, d/dU1 (index 0, 1, 2).
const Poly& fricke_v_partial(int i);
// F~ and partials with et1 replaced by -e_t e_1 (symbols e0, et, e1, einf);
// this is the form entering the confluence change of coordinates.
const Poly& fricke_v_sym_et_e1();
const Poly& fricke_v_partial_et_e1(int i);

// --- symplectic pairing -----------------------------------------------------
C symplectic_pair_v(const std::array<C, 3>& P, const std::array<C, 4>& theta,
                    const std::array<C, 3>& u, const std::array<C, 3>& v);
C symplectic_pair_v_chart(const std::array<C, 3>& P,
                          const std::array<C, 4>& theta,
                          const std::array<C, 3>& u,
                          const std::array<C, 3>& v, int chart);

// --- the 22 lines -----------------------------------------------------------
// Each of the eleven quadratic decompositions F~ = A*B + C*D (with A affine
// in a single coordinate) yields the two lines {A=0, C=0} and {A=0, D=0}.
struct DecompositionV {
  int index;              // 1..11, display order
  RatExpr A, B, C, D;     // expressions in X0, Wt, U1 and e-symbols
};
const std::vector<DecompositionV>& decompositions_v_sym();

struct LineV {
  int decomposition;  // 1..11
  int branch;         // 0 -> {A=0, C=0}, 1 -> {A=0, D=0}
  Sym fixed_var;      // the coordinate pinned by A = 0
  RatExpr fixed_value;
  RatExpr linear;     // affine form in the two remaining coordinates (= 0)
};
const std::vector<LineV>& lines_v_sym();

struct LineVValue {
  int decomposition, branch;
  Sym fixed_var;
  GaussianRational fixed_value;
  // linear = c1*v1 + c2*v2 + c0 over the two non-fixed coordinates.
  std::array<Sym, 2> vars;
  GaussianRational c1, c2, c0;
};
std::vector<LineVValue> lines_v(const ParamsV& p);

// --- singular locus ---------------------------------------------------------
struct SingularPointV {
  std::array<GaussianRational, 3> P;  // (X0, Wt, U1)
  std::string kind;
};
std::vector<SingularPointV> singularities_v(const ParamsV& p);

GaussianRational w_tilde(const ParamsV& p);
GaussianRational w_tilde_e_form(const ParamsV& p);
// Both displayed forms as Laurent expressions in e0, et1, einf (equal; tested).
RatExpr w_v_a_form_sym();
RatExpr w_v_e_form_sym();

// --- sampling ---------------------------------------------------------------
// Draws X0, Wt in a disk, solves the monic quadratic F~ = 0 for U1.
std::array<C, 3> sample_point_v(const std::array<C, 4>& theta, uint64_t seed);

}  // namespace pcv
